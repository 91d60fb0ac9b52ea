#include "skewpc/equivalence.hpp"

#include <algorithm>

namespace skewpc {

namespace {

bool binomial_less(const Binomial& x, const Binomial& y) {
  return x.a_ell != y.a_ell ? x.a_ell < y.a_ell : x.a0 < y.a0;
}

void require_degrees(const Binomial& a, std::uint32_t n) {
  if (a.ell < 1 || a.ell >= n)
    raise(ErrorCode::DegreeMismatch, "binomial degree must satisfy 1 <= ell <= n-1");
}

}  // namespace

std::string Binomial::to_string(const ChainRing& R) const {
  std::string al = R.to_string(a_ell), a0s = R.to_string(a0);
  if (al.find('+') != std::string::npos) al = "(" + al + ")";
  if (a0s.find('+') != std::string::npos) a0s = "(" + a0s + ")";
  std::string mid = (a_ell == R.one()) ? "" : al;
  std::string xell = ell == 1 ? "x" : "x^" + std::to_string(ell);
  return mid + xell + " + " + a0s;
}

Binomial schur_product(const ChainRing& R, const Binomial& a, const Binomial& b) {
  if (a.ell != b.ell) raise(ErrorCode::DegreeMismatch, "binomials have different degrees");
  return {a.ell, R.mul(a.a_ell, b.a_ell), R.mul(a.a0, b.a0)};
}

Binomial schur_inverse(const ChainRing& R, const Binomial& a) {
  return {a.ell, R.inv(a.a_ell), R.inv(a.a0)};
}

bool in_schur_group(const RingAutomorphism& sigma, const Binomial& a) {
  const ChainRing& R = sigma.ring();
  return R.is_unit(a.a_ell) && R.is_unit(a.a0) && sigma.fixes(a.a_ell) && sigma.fixes(a.a0);
}

Binomial theta(const RingAutomorphism& sigma, ElemId alpha, std::uint32_t n, std::uint32_t ell) {
  if (!sigma.ring().is_unit(alpha)) raise(ErrorCode::NotAUnit, "theta requires a unit");
  if (ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "theta requires 1 <= ell <= n-1");
  return {ell, sigma.norm(sigma.apply_pow(alpha, ell), n - ell), sigma.norm(alpha, n)};
}

std::vector<Binomial> theta_image(const RingAutomorphism& sigma, std::uint32_t n,
                                  std::uint32_t ell) {
  std::vector<Binomial> image;
  for (ElemId alpha : sigma.ring().units()) image.push_back(theta(sigma, alpha, n, ell));
  std::sort(image.begin(), image.end(), binomial_less);
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

EquivalenceReport equivalent(const SigmaPtr& sigma, const Binomial& a, const Binomial& b,
                             std::uint32_t n) {
  const ChainRing& R = sigma->ring();
  const RingAutomorphism& S = *sigma;
  if (a.ell != b.ell) raise(ErrorCode::DegreeMismatch, "binomials have different degrees");
  require_degrees(a, n);

  for (const Binomial* f : {&a, &b}) {
    Trinomial tri{n, f->ell, f->a_ell, f->a0};
    CentralityReport rep = is_central(tri.to_poly(sigma));
    if (!rep.central)
      raise(ErrorCode::NotCentral,
            "x^" + std::to_string(n) + " - (" + f->to_string(R) + ") is not central: " + rep.detail);
  }
  if (!in_schur_group(S, a) || !in_schur_group(S, b))
    raise(ErrorCode::OutOfHypothesis,
          "binomial coefficients must be sigma-fixed units");

  EquivalenceReport rep;
  // coefficient conditions: a0 = b0 N_n(alpha), a_ell = b_ell N_{n-ell}(sigma^ell(alpha))
  for (ElemId alpha : R.units()) {
    if (R.mul(b.a0, S.norm(alpha, n)) == a.a0 &&
        R.mul(b.a_ell, S.norm(S.apply_pow(alpha, a.ell), n - a.ell)) == a.a_ell) {
      rep.c2 = true;
      rep.witness_alpha = alpha;
      break;
    }
  }
  // independent route: membership of a * b^{-1} in the theta image
  Binomial target = schur_product(R, a, schur_inverse(R, b));
  auto image = theta_image(S, n, a.ell);
  rep.c4 = std::binary_search(image.begin(), image.end(), target, binomial_less);

  if (rep.c2 != rep.c4)
    raise(ErrorCode::Internal, "unit search and image membership disagree");
  rep.verdict = rep.c2;
  return rep;
}

EquivalenceClasses equivalence_classes(const SigmaPtr& sigma, std::uint32_t n, std::uint32_t ell,
                                       std::uint64_t budget) {
  const ChainRing& R = sigma->ring();
  const RingAutomorphism& S = *sigma;
  if (ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "need 1 <= ell <= n-1");
  if (n % S.order() != 0 || ell % S.order() != 0)
    raise(ErrorCode::HypothesisViolated,
          "n and ell must be divisible by the order of sigma");

  const auto& fu = S.fixed_units();
  if (std::uint64_t(fu.size()) * fu.size() > budget)
    raise(ErrorCode::BudgetExceeded, "binomial group exceeds the enumeration budget");

  EquivalenceClasses out;
  out.n = n;
  out.ell = ell;
  out.subgroup = theta_image(S, n, ell);
  for (const Binomial& h : out.subgroup)
    if (!in_schur_group(S, h))
      raise(ErrorCode::Internal, "theta image leaves the binomial group under the hypotheses");

  std::vector<Binomial> all;
  for (ElemId ae : fu)
    for (ElemId a0 : fu) all.push_back({ell, ae, a0});
  std::sort(all.begin(), all.end(), binomial_less);

  std::vector<std::uint8_t> assigned(all.size(), 0);
  auto index_of = [&](const Binomial& x) {
    auto it = std::lower_bound(all.begin(), all.end(), x, binomial_less);
    if (it == all.end() || !(*it == x)) raise(ErrorCode::Internal, "coset left the binomial group");
    return std::size_t(it - all.begin());
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<Binomial> cls;
    for (const Binomial& h : out.subgroup) {
      Binomial member = schur_product(R, all[i], h);
      std::size_t k = index_of(member);
      if (!assigned[k]) {
        assigned[k] = 1;
        cls.push_back(member);
      }
    }
    std::sort(cls.begin(), cls.end(), binomial_less);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace skewpc
