#pragma once

// Skew polynomials over (R, sigma) under the twisted product x a = sigma(a) x,
// right/left division, sigma-norms, centrality tests, and the representative
// space of right remainders modulo a monic polynomial.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewpc/automorphism.hpp"

namespace skewpc {

class SkewPolynomial {
 public:
  SkewPolynomial() = default;
  SkewPolynomial(SigmaPtr sigma, std::vector<ElemId> coeffs);  // trailing zeros are stripped

  static SkewPolynomial zero(SigmaPtr sigma) { return {std::move(sigma), {}}; }
  static SkewPolynomial constant(SigmaPtr sigma, ElemId c) { return {std::move(sigma), {c}}; }
  static SkewPolynomial monomial(SigmaPtr sigma, ElemId c, std::uint32_t deg);

  const std::vector<ElemId>& coeffs() const { return coeffs_; }
  int degree() const { return int(coeffs_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }
  ElemId coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  ElemId lead() const;  // throws BadArgument on the zero polynomial
  bool is_monic() const;
  const SigmaPtr& sigma() const { return sigma_; }
  const ChainRing& ring() const { return sigma_->ring(); }

  friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b);
  friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b);
  friend SkewPolynomial operator-(const SkewPolynomial& a);
  friend SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b);
  bool operator==(const SkewPolynomial& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string() const;

 private:
  SigmaPtr sigma_;
  std::vector<ElemId> coeffs_;  // ascending; index i holds the coefficient of x^i
};

// requires identical sigma maps over the same ring (RingMismatch otherwise)
SkewPolynomial skew_mul(const SkewPolynomial& a, const SkewPolynomial& b);

// g = q*d + rem with deg rem < deg d; the leading coefficient of d must be a
// unit (NonUnitLeadingCoefficient), in which case the pair is unique.
std::pair<SkewPolynomial, SkewPolynomial> right_divmod(const SkewPolynomial& g,
                                                       const SkewPolynomial& d);
// g = d*q + rem, symmetric counterpart
std::pair<SkewPolynomial, SkewPolynomial> left_divmod(const SkewPolynomial& g,
                                                      const SkewPolynomial& d);

inline ElemId sigma_norm(const RingAutomorphism& sigma, ElemId beta, std::uint64_t i) {
  return sigma.norm(beta, i);
}

struct CentralityReport {
  bool central = false;
  int failed_condition = 0;  // 0 if central; otherwise 1, 2 or 3
  std::size_t witness_index = 0;
  ElemId witness_r = 0;
  std::string detail;
};

// f must be monic (NotMonic).  Central iff every coefficient is fixed by
// sigma, a_i (r - sigma^i(r)) = 0 for all r, and sigma^n is the identity.
CentralityReport is_central(const SkewPolynomial& f);

// Membership in the set of coefficient vectors over the fixed subring whose
// support lies in the indices divisible by order(sigma).  Defined only for
// non-identity sigma (IdentityAutomorphism).
bool in_fixed_support_set(const RingAutomorphism& sigma, const std::vector<ElemId>& coeffs);

class QuotientRing;
using QuotPtr = std::shared_ptr<const QuotientRing>;

// The space of right remainders modulo a monic f, with g.h = rem_r(g h, f).
class QuotientRing {
 public:
  static QuotPtr make(SkewPolynomial f);  // NotMonic unless f is monic of degree >= 1

  const SkewPolynomial& modulus() const { return f_; }
  std::uint32_t n() const { return n_; }
  const SigmaPtr& sigma() const { return sigma_; }
  const ChainRing& ring() const { return sigma_->ring(); }
  bool modulus_central() const { return central_; }
  const CentralityReport& centrality() const { return centrality_; }

  bool size_fits_u64() const;
  std::uint64_t size() const;  // |R|^n; throws BadArgument when it does not fit

  bool compatible(const QuotientRing& other) const;

 private:
  QuotientRing(SkewPolynomial f, CentralityReport rep);
  SigmaPtr sigma_;
  SkewPolynomial f_;
  std::uint32_t n_;
  bool central_;
  CentralityReport centrality_;
};

struct QuotientElement {
  QuotPtr ctx;
  SkewPolynomial value;  // degree < n

  bool operator==(const QuotientElement& other) const { return value == other.value; }
  std::uint32_t hamming_weight() const;
};

QuotientElement reduce_mod(const SkewPolynomial& g, const QuotPtr& ctx);
QuotientElement quotient_add(const QuotientElement& a, const QuotientElement& b);
QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b);  // ModulusMismatch

// (g.h).k - g.(h.k) in the remainder space; identically zero for central f
SkewPolynomial associator(const SkewPolynomial& g, const SkewPolynomial& h,
                          const SkewPolynomial& k, const QuotPtr& ctx);

// x - beta right-divides h iff sum a_i N_i(beta) = 0
bool right_root_test(const SkewPolynomial& h, ElemId beta);

// g(alpha x) = sum g_i N_i(alpha) x^i
SkewPolynomial substitute_alpha_x(const SkewPolynomial& g, ElemId alpha);

}  // namespace skewpc
