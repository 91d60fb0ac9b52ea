#include "skewpc/class_counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace skewpc {

namespace {

using u64 = std::uint64_t;

// Abstract finite abelian group on indices 0..n-1.
struct AbGroup {
  std::vector<std::uint32_t> elems;  // payload carried through quotients
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> op;
  std::uint32_t identity = 0;

  std::uint32_t size() const { return std::uint32_t(elems.size()); }
  u64 order_of(std::uint32_t g) const {
    u64 k = 1;
    std::uint32_t x = g;
    while (x != identity) {
      x = op(x, g);
      ++k;
      if (k > elems.size() + 1) raise(ErrorCode::Internal, "group order diverged");
    }
    return k;
  }
  std::uint32_t pow(std::uint32_t g, u64 k) const {
    std::uint32_t acc = identity;
    for (u64 i = 0; i < k; ++i) acc = op(acc, g);
    return acc;
  }
  std::uint32_t invert(std::uint32_t g) const { return pow(g, order_of(g) - 1); }
};

// basis of a finite abelian p-group: (element, order) pairs
std::vector<std::pair<std::uint32_t, u64>> abelian_basis(const AbGroup& G) {
  if (G.size() == 1) return {};

  std::uint32_t g = G.identity;
  u64 max_order = 1;
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    u64 o = G.order_of(x);
    if (o > max_order) {
      max_order = o;
      g = x;
    }
  }

  // cyclic subgroup <g> and canonical coset representatives (minimal index)
  std::vector<std::uint32_t> gpow(max_order);
  std::unordered_map<std::uint32_t, u64> dlog;
  {
    std::uint32_t x = G.identity;
    for (u64 k = 0; k < max_order; ++k) {
      gpow[k] = x;
      dlog.emplace(x, k);
      x = G.op(x, g);
    }
  }
  std::vector<std::uint32_t> coset_rep(G.size());
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    std::uint32_t rep = x;
    for (u64 k = 0; k < max_order; ++k) rep = std::min(rep, G.op(x, gpow[k]));
    coset_rep[x] = rep;
  }

  // quotient group on the representatives
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> rep_index(G.size(), 0);
  for (std::uint32_t x = 0; x < G.size(); ++x)
    if (coset_rep[x] == x) {
      rep_index[x] = std::uint32_t(reps.size());
      reps.push_back(x);
    }
  AbGroup Q;
  Q.elems = reps;
  Q.identity = rep_index[coset_rep[G.identity]];
  Q.op = [&G, &coset_rep, &rep_index, reps](std::uint32_t i, std::uint32_t j) {
    return rep_index[coset_rep[G.op(reps[i], reps[j])]];
  };

  auto sub_basis = abelian_basis(Q);

  std::vector<std::pair<std::uint32_t, u64>> basis{{g, max_order}};
  for (auto [qi, qorder] : sub_basis) {
    // lift: adjust the representative so its qorder-th power is the identity
    std::uint32_t y = reps[qi];
    std::uint32_t z = G.pow(y, qorder);
    auto it = dlog.find(z);
    if (it == dlog.end()) raise(ErrorCode::Internal, "lift left the cyclic subgroup");
    u64 tpow = it->second;
    if (tpow % qorder != 0) raise(ErrorCode::Internal, "lift is not divisible");
    std::uint32_t adjust = G.invert(G.pow(g, tpow / qorder));
    std::uint32_t lifted = G.op(y, adjust);
    if (G.order_of(lifted) != qorder) raise(ErrorCode::Internal, "lifted order is wrong");
    basis.emplace_back(lifted, qorder);
  }
  return basis;
}

void check_hypotheses(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell) {
  if (ell < 1 || ell >= n) raise(ErrorCode::DegreeMismatch, "need 1 <= ell <= n-1");
  if (n % sigma.order() != 0 || ell % sigma.order() != 0)
    raise(ErrorCode::HypothesisViolated, "n and ell must be divisible by the order of sigma");
}

}  // namespace

AbelianDecomposition decompose_U(const ChainRing& R) {
  const auto& U = R.unit_one_plus_gamma();
  std::vector<std::uint32_t> index_of(R.size(), 0);
  for (std::uint32_t i = 0; i < U.size(); ++i) index_of[U[i]] = i;

  AbGroup G;
  G.elems.assign(U.begin(), U.end());
  G.op = [&R, &index_of, &U](std::uint32_t i, std::uint32_t j) {
    return index_of[R.mul(U[i], U[j])];
  };
  G.identity = index_of[R.one()];

  auto basis = abelian_basis(G);
  std::sort(basis.begin(), basis.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });

  AbelianDecomposition out;
  u64 product = 1;
  for (auto [gi, order] : basis) {
    out.generators.push_back(U[gi]);
    out.orders.push_back(order);
    std::uint32_t k = 0;
    u64 o = order;
    while (o > 1 && o % R.p() == 0) {
      o /= R.p();
      ++k;
    }
    if (o != 1) raise(ErrorCode::Internal, "factor order is not a power of p");
    out.exponents.push_back(k);
    product *= order;
  }
  if (product != U.size())
    raise(ErrorCode::Internal, "decomposition orders do not multiply to |U|");

  // bijectivity: all exponent tuples expand to distinct elements
  std::vector<std::uint8_t> seen(R.size(), 0);
  std::vector<u64> tuple(out.orders.size(), 0);
  u64 count = 0;
  for (;;) {
    ElemId v = R.one();
    for (std::size_t i = 0; i < tuple.size(); ++i) v = R.mul(v, R.pow(out.generators[i], tuple[i]));
    if (seen[v]) raise(ErrorCode::Internal, "decomposition expansion is not injective");
    seen[v] = 1;
    ++count;
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == out.orders[pos]) tuple[pos++] = 0;
    if (pos == tuple.size()) break;
  }
  if (count != U.size()) raise(ErrorCode::Internal, "decomposition expansion misses elements");
  return out;
}

std::uint64_t ker_theta_T(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint64_t q,
                          std::uint32_t p) {
  if (ell >= n) raise(ErrorCode::DegreeMismatch, "need ell < n");
  const u64 modulus = q - 1;
  if (modulus == 0) raise(ErrorCode::BadArgument, "q must be >= 2");
  u64 pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= p;

  // gcd(A, B, q-1) with A, B reduced mod q-1; geometric sums avoid overflow
  auto geom_mod = [&](std::uint32_t terms) {
    u64 acc = 0, power = 1 % modulus;
    for (std::uint32_t i = 0; i < terms; ++i) {
      acc = (acc + power) % modulus;
      power = (power * (pk % modulus)) % modulus;
    }
    return acc;
  };
  u64 a, b;
  if (pk == 1) {  // k = 0: the norms are plain powers
    a = (n - ell) % modulus;
    b = n % modulus;
  } else {
    a = geom_mod(n - ell);
    b = geom_mod(n);
  }
  return std::gcd(std::gcd(a, b), modulus);
}

std::uint64_t ker_theta_U(const RingAutomorphism& sigma, const AbelianDecomposition& decomp,
                          std::uint32_t n, std::uint32_t ell) {
  check_hypotheses(sigma, n, ell);
  const ChainRing& R = sigma.ring();
  const std::size_t J = decomp.generators.size();

  // power tables of a_i = N_{n-ell}(u_i) and b_i = N_n(u_i)
  std::vector<std::vector<ElemId>> apow(J), bpow(J);
  for (std::size_t i = 0; i < J; ++i) {
    ElemId ai = sigma.norm(decomp.generators[i], n - ell);
    ElemId bi = sigma.norm(decomp.generators[i], n);
    apow[i].resize(decomp.orders[i]);
    bpow[i].resize(decomp.orders[i]);
    for (u64 mi = 0; mi < decomp.orders[i]; ++mi) {
      apow[i][mi] = R.pow(ai, mi);
      bpow[i][mi] = R.pow(bi, mi);
    }
  }

  std::vector<u64> tuple(J, 0);
  u64 count = 0;
  for (;;) {
    ElemId pa = R.one(), pb = R.one();
    for (std::size_t i = 0; i < J; ++i) {
      pa = R.mul(pa, apow[i][tuple[i]]);
      pb = R.mul(pb, bpow[i][tuple[i]]);
    }
    if (pa == R.one() && pb == R.one()) ++count;
    std::size_t pos = 0;
    while (pos < J && ++tuple[pos] == decomp.orders[pos]) tuple[pos++] = 0;
    if (pos == J) break;
  }
  return count;
}

std::uint64_t ker_theta_brute(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell) {
  if (ell >= n) raise(ErrorCode::DegreeMismatch, "need ell < n");
  const ChainRing& R = sigma.ring();
  u64 count = 0;
  for (ElemId alpha : R.units())
    if (sigma.norm(sigma.apply_pow(alpha, ell), n - ell) == R.one() &&
        sigma.norm(alpha, n) == R.one())
      ++count;
  return count;
}

std::uint64_t theta_image_size(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell) {
  return theta_image(sigma, n, ell).size();
}

CountReport h_size_report(const RingAutomorphism& sigma, std::uint32_t n, std::uint32_t ell) {
  check_hypotheses(sigma, n, ell);
  const ChainRing& R = sigma.ring();

  CountReport rep;
  rep.decomposition = decompose_U(R);
  rep.ker_T = ker_theta_T(n, ell, sigma.teich_exponent(), R.q(), R.p());
  rep.ker_U = ker_theta_U(sigma, rep.decomposition, n, ell);
  rep.ker_total = rep.ker_T * rep.ker_U;
  const u64 units = R.units().size();
  if (rep.ker_total == 0 || units % rep.ker_total != 0)
    raise(ErrorCode::Internal, "kernel size does not divide the unit-group order");
  rep.H_size = units / rep.ker_total;
  rep.brute_ker = ker_theta_brute(sigma, n, ell);
  rep.brute_H = theta_image_size(sigma, n, ell);
  rep.consistent = rep.ker_total == rep.brute_ker && rep.H_size == rep.brute_H;
  return rep;
}

}  // namespace skewpc
