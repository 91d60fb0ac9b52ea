#include "skewpc/skew_poly.hpp"

#include <sstream>

namespace skewpc {

namespace {

void require_same_context(const SkewPolynomial& a, const SkewPolynomial& b) {
  if (!a.sigma() || !b.sigma()) raise(ErrorCode::BadArgument, "uninitialized polynomial");
  if (!a.sigma()->same_map(*b.sigma()))
    raise(ErrorCode::RingMismatch, "polynomials live over different (R, sigma)");
}

}  // namespace

SkewPolynomial::SkewPolynomial(SigmaPtr sigma, std::vector<ElemId> coeffs)
    : sigma_(std::move(sigma)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SkewPolynomial SkewPolynomial::monomial(SigmaPtr sigma, ElemId c, std::uint32_t deg) {
  std::vector<ElemId> cs(deg + 1, 0);
  cs[deg] = c;
  return {std::move(sigma), std::move(cs)};
}

ElemId SkewPolynomial::lead() const {
  if (coeffs_.empty()) raise(ErrorCode::BadArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool SkewPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == ring().one();
}

SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
  require_same_context(a, b);
  const ChainRing& R = a.ring();
  std::vector<ElemId> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(a.coeff(i), b.coeff(i));
  return {a.sigma_, std::move(out)};
}

SkewPolynomial operator-(const SkewPolynomial& a) {
  const ChainRing& R = a.ring();
  std::vector<ElemId> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.neg(a.coeffs_[i]);
  return {a.sigma_, std::move(out)};
}

SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) { return a + (-b); }

SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) {
  require_same_context(a, b);
  if (a.is_zero() || b.is_zero()) return SkewPolynomial::zero(a.sigma_);
  const ChainRing& R = a.ring();
  const RingAutomorphism& S = *a.sigma_;
  std::vector<ElemId> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      // (a_i x^i)(b_j x^j) = a_i sigma^i(b_j) x^{i+j}
      ElemId term = R.mul(a.coeffs_[i], S.apply_pow(b.coeffs_[j], i));
      out[i + j] = R.add(out[i + j], term);
    }
  }
  return {a.sigma_, std::move(out)};
}

SkewPolynomial skew_mul(const SkewPolynomial& a, const SkewPolynomial& b) { return a * b; }

std::string SkewPolynomial::to_string() const {
  if (is_zero()) return "0";
  const ChainRing& R = ring();
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    ElemId c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = R.to_string(c);
    bool composite = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (composite ? "(" + cs + ")" : cs);
    } else {
      if (c != R.one()) os << (composite ? "(" + cs + ")" : cs);
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<SkewPolynomial, SkewPolynomial> right_divmod(const SkewPolynomial& g,
                                                       const SkewPolynomial& d) {
  require_same_context(g, d);
  const ChainRing& R = g.ring();
  const RingAutomorphism& S = *g.sigma();
  if (d.is_zero() || !R.is_unit(d.lead()))
    raise(ErrorCode::NonUnitLeadingCoefficient, "divisor must have a unit leading coefficient");
  const int m = d.degree();
  if (g.degree() < m) return {SkewPolynomial::zero(g.sigma()), g};
  const ElemId dm_inv = R.inv(d.lead());
  std::vector<ElemId> q(std::size_t(g.degree() - m) + 1, 0);
  SkewPolynomial rem = g;
  while (rem.degree() >= m) {
    const std::uint32_t t = std::uint32_t(rem.degree() - m);
    // (c x^t)(d_m x^m) has leading coefficient c sigma^t(d_m)
    const ElemId c = R.mul(rem.lead(), S.apply_pow(dm_inv, t));
    q[t] = R.add(q[t], c);
    rem = rem - SkewPolynomial::monomial(g.sigma(), c, t) * d;
  }
  return {SkewPolynomial(g.sigma(), std::move(q)), rem};
}

std::pair<SkewPolynomial, SkewPolynomial> left_divmod(const SkewPolynomial& g,
                                                      const SkewPolynomial& d) {
  require_same_context(g, d);
  const ChainRing& R = g.ring();
  const RingAutomorphism& S = *g.sigma();
  if (d.is_zero() || !R.is_unit(d.lead()))
    raise(ErrorCode::NonUnitLeadingCoefficient, "divisor must have a unit leading coefficient");
  const int m = d.degree();
  if (g.degree() < m) return {SkewPolynomial::zero(g.sigma()), g};
  const std::uint32_t mu = S.order();
  std::vector<ElemId> q(std::size_t(g.degree() - m) + 1, 0);
  SkewPolynomial rem = g;
  while (rem.degree() >= m) {
    const std::uint32_t t = std::uint32_t(rem.degree() - m);
    // (d_m x^m)(c x^t) has leading coefficient d_m sigma^m(c)
    ElemId c = R.mul(R.inv(d.lead()), rem.lead());
    c = S.apply_pow(c, std::uint64_t(mu - (std::uint32_t(m) % mu)) % mu);  // sigma^{-m}
    q[t] = R.add(q[t], c);
    rem = rem - d * SkewPolynomial::monomial(g.sigma(), c, t);
  }
  return {SkewPolynomial(g.sigma(), std::move(q)), rem};
}

CentralityReport is_central(const SkewPolynomial& f) {
  if (!f.is_monic() || f.degree() < 1) raise(ErrorCode::NotMonic, "centrality test requires a monic polynomial");
  const ChainRing& R = f.ring();
  const RingAutomorphism& S = *f.sigma();
  const std::size_t n = std::size_t(f.degree());
  CentralityReport rep;

  for (std::size_t i = 0; i < n; ++i)
    if (!S.fixes(f.coeff(i))) {
      rep.failed_condition = 1;
      rep.witness_index = i;
      rep.detail = "coefficient of x^" + std::to_string(i) + " is not fixed by sigma";
      return rep;
    }
  for (std::size_t i = 0; i < n; ++i) {
    const ElemId ai = f.coeff(i);
    if (ai == 0) continue;
    for (std::uint64_t rr = 0; rr < R.size(); ++rr) {
      ElemId diff = R.sub(ElemId(rr), S.apply_pow(ElemId(rr), i));
      if (R.mul(ai, diff) != 0) {
        rep.failed_condition = 2;
        rep.witness_index = i;
        rep.witness_r = ElemId(rr);
        rep.detail = "a_" + std::to_string(i) + " (r - sigma^" + std::to_string(i) +
                     "(r)) != 0 at r = " + R.to_string(ElemId(rr));
        return rep;
      }
    }
  }
  if (n % S.order() != 0) {
    rep.failed_condition = 3;
    rep.detail = "sigma^n is not the identity";
    return rep;
  }
  rep.central = true;
  return rep;
}

bool in_fixed_support_set(const RingAutomorphism& sigma, const std::vector<ElemId>& coeffs) {
  if (sigma.order() == 1)
    raise(ErrorCode::IdentityAutomorphism,
          "the support condition is defined only for sigma of order >= 2");
  const std::uint32_t mu = sigma.order();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!sigma.fixes(coeffs[i])) return false;
    if (i % mu != 0 && coeffs[i] != 0) return false;
  }
  return true;
}

QuotientRing::QuotientRing(SkewPolynomial f, CentralityReport rep)
    : sigma_(f.sigma()),
      f_(std::move(f)),
      n_(std::uint32_t(f_.degree())),
      central_(rep.central),
      centrality_(std::move(rep)) {}

QuotPtr QuotientRing::make(SkewPolynomial f) {
  if (f.degree() < 1 || !f.is_monic())
    raise(ErrorCode::NotMonic, "quotient modulus must be monic of degree >= 1");
  CentralityReport rep = is_central(f);
  return QuotPtr(new QuotientRing(std::move(f), std::move(rep)));
}

bool QuotientRing::size_fits_u64() const {
  unsigned __int128 acc = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    acc *= ring().size();
    if (acc > (unsigned __int128)UINT64_MAX) return false;
  }
  return true;
}

std::uint64_t QuotientRing::size() const {
  if (!size_fits_u64()) raise(ErrorCode::BadArgument, "|R|^n does not fit in 64 bits");
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < n_; ++i) acc *= ring().size();
  return acc;
}

bool QuotientRing::compatible(const QuotientRing& other) const {
  return sigma_->same_map(*other.sigma_) && f_ == other.f_;
}

std::uint32_t QuotientElement::hamming_weight() const {
  std::uint32_t w = 0;
  for (ElemId c : value.coeffs())
    if (c != 0) ++w;
  return w;
}

QuotientElement reduce_mod(const SkewPolynomial& g, const QuotPtr& ctx) {
  if (!ctx) raise(ErrorCode::BadArgument, "null quotient context");
  if (!g.sigma()->same_map(*ctx->sigma()))
    raise(ErrorCode::RingMismatch, "polynomial and modulus live over different (R, sigma)");
  return {ctx, right_divmod(g, ctx->modulus()).second};
}

QuotientElement quotient_add(const QuotientElement& a, const QuotientElement& b) {
  if (!a.ctx || !b.ctx || !a.ctx->compatible(*b.ctx))
    raise(ErrorCode::ModulusMismatch, "quotient elements have different moduli");
  return {a.ctx, a.value + b.value};
}

QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b) {
  if (!a.ctx || !b.ctx || !a.ctx->compatible(*b.ctx))
    raise(ErrorCode::ModulusMismatch, "quotient elements have different moduli");
  return reduce_mod(a.value * b.value, a.ctx);
}

SkewPolynomial associator(const SkewPolynomial& g, const SkewPolynomial& h,
                          const SkewPolynomial& k, const QuotPtr& ctx) {
  QuotientElement gh = reduce_mod(g * h, ctx);
  QuotientElement hk = reduce_mod(h * k, ctx);
  QuotientElement left = reduce_mod(gh.value * k, ctx);
  QuotientElement right = reduce_mod(g * hk.value, ctx);
  return left.value - right.value;
}

bool right_root_test(const SkewPolynomial& h, ElemId beta) {
  const ChainRing& R = h.ring();
  const RingAutomorphism& S = *h.sigma();
  ElemId acc = 0;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i)
    acc = R.add(acc, R.mul(h.coeff(i), S.norm(beta, i)));
  return acc == 0;
}

SkewPolynomial substitute_alpha_x(const SkewPolynomial& g, ElemId alpha) {
  const ChainRing& R = g.ring();
  const RingAutomorphism& S = *g.sigma();
  std::vector<ElemId> out(g.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.mul(g.coeff(i), S.norm(alpha, i));
  return {g.sigma(), std::move(out)};
}

}  // namespace skewpc
