#pragma once

// The Schur-product group of binomials with sigma-fixed unit coefficients,
// the norm homomorphism theta into it, and decision procedures for the
// Hamming equivalence of central trinomials.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewpc/polycyclic.hpp"

namespace skewpc {

// a(x) = a_ell x^ell + a0
struct Binomial {
  std::uint32_t ell = 1;
  ElemId a_ell = 0;
  ElemId a0 = 0;

  bool operator==(const Binomial& other) const = default;
  std::string to_string(const ChainRing& R) const;
};

// componentwise product; abelian group law on binomials with unit coefficients
Binomial schur_product(const ChainRing& R, const Binomial& a, const Binomial& b);  // DegreeMismatch
Binomial schur_inverse(const ChainRing& R, const Binomial& a);                     // NotAUnit

// both coefficients are sigma-fixed units
bool in_schur_group(const RingAutomorphism& sigma, const Binomial& a);

// theta(alpha) = N_{n-ell}(sigma^ell(alpha)) x^ell + N_n(alpha)
Binomial theta(const RingAutomorphism& sigma, ElemId alpha, std::uint32_t n,
               std::uint32_t ell);  // NotAUnit

// image of theta over all units, deduplicated and sorted by (a_ell, a0)
std::vector<Binomial> theta_image(const RingAutomorphism& sigma, std::uint32_t n,
                                  std::uint32_t ell);

struct EquivalenceReport {
  bool verdict = false;
  std::optional<ElemId> witness_alpha;  // smallest unit by element id
  bool c2 = false;                      // coefficient conditions via unit search
  bool c4 = false;                      // membership of a * b^{-1} in the theta image
};

// Decides whether the trinomials x^n - a(x) and x^n - b(x) define equivalent
// codes.  Both trinomials must be central (NotCentral) and both binomials
// must have sigma-fixed unit coefficients (OutOfHypothesis).  The unit search
// for the coefficient conditions is cross-checked against membership of
// a * b^{-1} in the theta image; disagreement is an internal failure.
EquivalenceReport equivalent(const SigmaPtr& sigma, const Binomial& a, const Binomial& b,
                             std::uint32_t n);

struct EquivalenceClasses {
  std::uint32_t n = 0, ell = 0;
  std::vector<Binomial> subgroup;               // the theta image
  std::vector<std::vector<Binomial>> classes;   // cosets, each sorted, sorted by representative
};

// Partition of the full binomial group into cosets of the theta image.
// Requires n = ell = 0 mod order(sigma) (HypothesisViolated); under these
// hypotheses every member defines a central trinomial.
EquivalenceClasses equivalence_classes(const SigmaPtr& sigma, std::uint32_t n, std::uint32_t ell,
                                       std::uint64_t budget = 1 << 16);

}  // namespace skewpc
