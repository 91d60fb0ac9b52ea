#pragma once

// Skew polycyclic codes as shift-invariant submodules: the twisted shift,
// its companion matrix, submodule closure, Hamming weight distributions,
// and constructive verification of the coefficient-scaling isometries.

#include <cstdint>
#include <string>
#include <vector>

#include "skewpc/skew_poly.hpp"

namespace skewpc {

// f(x) = x^n - (a_ell x^ell + a_0), 1 <= ell <= n-1
struct Trinomial {
  std::uint32_t n = 2;
  std::uint32_t ell = 1;
  ElemId a_ell = 0;
  ElemId a0 = 0;

  void validate() const;
  std::vector<ElemId> coeff_vector(const ChainRing& R) const;  // length n, a0 at 0, a_ell at ell
  SkewPolynomial to_poly(const SigmaPtr& sigma) const;
  std::string to_string(const ChainRing& R) const;
};

using CodeVector = std::vector<ElemId>;

// (0, sigma(c_0), ..., sigma(c_{n-2})) + sigma(c_{n-1}) * avec
CodeVector polycyclic_shift(const RingAutomorphism& sigma, const CodeVector& c,
                            const std::vector<ElemId>& avec);  // LengthMismatch

std::vector<std::vector<ElemId>> companion_matrix(const ChainRing& R, const Trinomial& f);

// row vector times matrix over R
CodeVector row_times_matrix(const ChainRing& R, const CodeVector& v,
                            const std::vector<std::vector<ElemId>>& mat);

struct Code {
  Trinomial f;
  SigmaPtr sigma;
  std::vector<CodeVector> elements;               // sorted by encoded key
  std::vector<std::uint64_t> weight_distribution;  // index = Hamming weight
  bool shift_closed = false;
};

// Smallest R-submodule of R^n containing the generators and closed under the
// twisted shift of f.  Enumeration is capped by `budget` (BudgetExceeded).
Code submodule_closure(const SigmaPtr& sigma, const Trinomial& f,
                       const std::vector<CodeVector>& generators, std::uint64_t budget);

std::vector<std::uint64_t> weight_distribution(const std::vector<CodeVector>& words,
                                               std::uint32_t n);

// All distinct codes generated by one vector, for ambient spaces of at most
// `ambient_budget` vectors (BudgetExceeded beyond that).
std::vector<Code> singleton_generated_codes(const SigmaPtr& sigma, const Trinomial& f,
                                            std::uint64_t ambient_budget);

// coefficient-wise scaling g_i -> g_i N_i(alpha), read in the target space
QuotientElement phi_alpha(const QuotientElement& g, ElemId alpha, const QuotPtr& target);

struct IsometryOptions {
  std::uint64_t sweep_budget = std::uint64_t(1) << 20;    // full-quotient sweep bound
  std::uint64_t closure_budget = std::uint64_t(1) << 16;  // per-ideal enumeration bound
  std::uint64_t lattice_budget = std::uint64_t(1) << 12;  // full singleton lattice bound
  std::uint64_t pair_samples = 4096;                      // sampled (g, h) pairs
  bool check_ideals = true;
};

struct IdealCheck {
  std::string generator;
  std::uint64_t size = 0;
  bool weights_match = false;
  bool image_is_ideal = false;
  bool image_matches_generated = false;
  std::vector<std::uint64_t> weights;  // weight distribution of the source ideal
  bool skipped = false;                // enumeration exceeded the budget
};

struct IsometryReport {
  bool verdict = false;
  std::string mode;  // "full-quotient" or "singleton-ideals"
  ElemId alpha = 0;
  bool well_defined = false;
  bool bijective = false;
  bool weight_preserving = false;
  bool additive = false;
  bool multiplicative = false;
  std::uint64_t elements_swept = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<IdealCheck> ideals;
  std::vector<std::string> violations;
};

// Constructive check that g -> sum g_i N_i(alpha) x^i is a weight-preserving
// ring isomorphism from the f1-remainder space onto the f2-remainder space.
// Both trinomials must be central (NotCentral) of equal degree.
IsometryReport verify_isometry(const SigmaPtr& sigma, ElemId alpha, const Trinomial& f1,
                               const Trinomial& f2, const IsometryOptions& opts = {});

}  // namespace skewpc
