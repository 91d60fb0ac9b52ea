#pragma once

// Kernel sizes of the norm homomorphism theta, computed two ways: the closed
// form (Teichmüller gcd formula times a tuple count over an abelian-group
// decomposition of 1 + gamma R) and by brute force over all units.  The two
// routes are always reported together; disagreement is a hard failure.

#include <cstdint>
#include <vector>

#include "skewpc/equivalence.hpp"

namespace skewpc {

struct AbelianDecomposition {
  std::vector<ElemId> generators;      // of 1 + gamma R, orders descending
  std::vector<std::uint64_t> orders;   // p^{k_i}
  std::vector<std::uint32_t> exponents;  // k_i
};

// Basis of the abelian p-group 1 + gamma R: split off a cyclic factor of
// maximal order, recurse on the quotient, and lift.  The decomposition is
// validated by expanding all exponent tuples and checking bijectivity.
AbelianDecomposition decompose_U(const ChainRing& R);

// |ker(theta|_{T*})| from the Teichmüller exponent k of sigma
std::uint64_t ker_theta_T(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint64_t q,
                          std::uint32_t p);

// |ker(theta|_U)| counted over exponent tuples; needs n = ell = 0 mod order(sigma)
std::uint64_t ker_theta_U(const RingAutomorphism& sigma, const AbelianDecomposition& decomp,
                          std::uint32_t n, std::uint32_t ell);

// direct count over all units
std::uint64_t ker_theta_brute(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell);

// raw size of the theta image, defined with or without the hypotheses
std::uint64_t theta_image_size(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell);

struct CountReport {
  std::uint64_t ker_T = 0;
  std::uint64_t ker_U = 0;
  std::uint64_t ker_total = 0;
  std::uint64_t H_size = 0;
  std::uint64_t brute_ker = 0;
  std::uint64_t brute_H = 0;
  bool consistent = false;
  AbelianDecomposition decomposition;
};

// formula and brute-force counts side by side; needs n = ell = 0 mod order(sigma)
CountReport h_size_report(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell);

}  // namespace skewpc
