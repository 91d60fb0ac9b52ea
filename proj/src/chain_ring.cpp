#include "skewpc/chain_ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace skewpc {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u32 v) {
  if (v < 2) return false;
  for (u32 d = 2; u64(d) * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

u128 ipow128(u64 base, u32 exp) {
  u128 acc = 1;
  while (exp--) acc *= base;
  return acc;
}

// --- irreducibility of hbar over F_p by trial division -------------------

std::vector<u32> poly_mod_p(const std::vector<u32>& h, u32 p) {
  std::vector<u32> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = h[i] % p;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// remainder of a by monic divisor d, both over F_p, ascending coefficients
std::vector<u32> poly_rem_fp(std::vector<u32> a, const std::vector<u32>& d, u32 p) {
  const std::size_t dd = d.size() - 1;
  while (a.size() > dd) {
    u32 lead = a.back();
    std::size_t shift = a.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dd; ++i) {
        u64 sub = (u64(lead) * d[i]) % p;
        a[shift + i] = u32((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible_fp(const std::vector<u32>& hbar, u32 p) {
  const std::size_t deg = hbar.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // try all monic divisors of degree 1 .. deg/2
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    u64 count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (u64 code = 0; code < count; ++code) {
      std::vector<u32> g(d + 1, 0);
      u64 c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = u32(c % p);
        c /= p;
      }
      g[d] = 1;
      auto rem = poly_rem_fp(hbar, g, p);
      bool zero = true;
      for (u32 v : rem)
        if (v != 0) { zero = false; break; }
      if (zero) return false;
    }
  }
  return true;
}

// --- digit-vector arithmetic engines --------------------------------------
//
// Working representation during table construction: a flat vector of u64
// digits matching the canonical radices.  Blocks of r digits are polynomial
// coefficients of the base extension in ascending powers of its generator.

using Digits = std::vector<u64>;

// c = a*b over Z_M[x]/<h> with h monic of degree r, ascending coefficients
void base_mul(const u64* a, const u64* b, u64* out, u32 r, u64 M, const std::vector<u64>& h) {
  if (r == 1) {
    out[0] = (u128(a[0]) * b[0]) % M;
    return;
  }
  std::vector<u64> conv(2 * r - 1, 0);
  for (u32 i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (u32 j = 0; j < r; ++j)
      conv[i + j] = u64((conv[i + j] + u128(a[i]) * b[j]) % M);
  }
  for (u32 d = 2 * r - 2; d >= r; --d) {
    u64 c = conv[d];
    conv[d] = 0;
    if (c == 0) continue;
    // x^r = -(h_0 + ... + h_{r-1} x^{r-1})
    for (u32 j = 0; j < r; ++j) {
      u64 sub = u64((u128(c) * h[j]) % M);
      conv[d - r + j] = (conv[d - r + j] + M - sub) % M;
    }
  }
  std::copy(conv.begin(), conv.begin() + r, out);
}

struct Engine {
  std::vector<u32> radices;
  virtual ~Engine() = default;
  virtual void mul(const Digits& a, const Digits& b, Digits& out) const = 0;
  void add(const Digits& a, const Digits& b, Digits& out) const {
    for (std::size_t k = 0; k < radices.size(); ++k) out[k] = (a[k] + b[k]) % radices[k];
  }
  void neg(const Digits& a, Digits& out) const {
    for (std::size_t k = 0; k < radices.size(); ++k) out[k] = (radices[k] - a[k]) % radices[k];
  }
};

struct GaloisEngine final : Engine {
  u64 M;
  u32 r;
  std::vector<u64> h;  // ascending, size r+1, monic
  void mul(const Digits& a, const Digits& b, Digits& out) const override {
    base_mul(a.data(), b.data(), out.data(), r, M, h);
  }
};

struct TruncatedEngine final : Engine {
  u32 p, r, e;
  std::vector<u64> hbar;
  void mul(const Digits& a, const Digits& b, Digits& out) const override {
    std::fill(out.begin(), out.end(), 0);
    std::vector<u64> prod(r);
    for (u32 i = 0; i < e; ++i)
      for (u32 j = 0; i + j < e; ++j) {
        base_mul(&a[std::size_t(i) * r], &b[std::size_t(j) * r], prod.data(), r, p, hbar);
        for (u32 k = 0; k < r; ++k) {
          std::size_t pos = std::size_t(i + j) * r + k;
          out[pos] = (out[pos] + prod[k]) % p;
        }
      }
  }
};

struct EisensteinEngine final : Engine {
  u64 M, M2;  // p^m and p^{m-1}
  u32 p, r, t, s;
  std::vector<u64> h;  // base modulus, degree r
  std::vector<u64> w;  // ascending, degree < t
  void mul(const Digits& a, const Digits& b, Digits& out) const override {
    // convolve blocks over GR(p^m, r), then push u^{>=t} down via u^t = p*w(u)
    std::vector<std::vector<u64>> conv(2 * t - 1, std::vector<u64>(r, 0));
    std::vector<u64> prod(r);
    for (u32 i = 0; i < t; ++i)
      for (u32 j = 0; j < t; ++j) {
        base_mul(&a[std::size_t(i) * r], &b[std::size_t(j) * r], prod.data(), r, M, h);
        auto& dst = conv[i + j];
        for (u32 k = 0; k < r; ++k) dst[k] = (dst[k] + prod[k]) % M;
      }
    if (t >= 2) {
      for (u32 d = 2 * t - 2; d >= t; --d) {
        auto blk = conv[d];
        std::fill(conv[d].begin(), conv[d].end(), 0);
        for (u32 j = 0; j < u32(w.size()); ++j) {
          u64 scalar = (u128(p) * w[j]) % M;
          if (scalar == 0) continue;
          auto& dst = conv[d - t + j];
          for (u32 k = 0; k < r; ++k)
            dst[k] = u64((dst[k] + u128(scalar) * blk[k]) % M);
        }
      }
    }
    for (u32 i = 0; i < t; ++i) {
      u64 radix = (i < s) ? M : M2;
      for (u32 k = 0; k < r; ++k) out[std::size_t(i) * r + k] = conv[i][k] % radix;
    }
  }
};

std::unique_ptr<Engine> make_engine(const RingPresentation& pres) {
  const u32 p = pres.p, m = pres.m, r = pres.r;
  switch (pres.kind) {
    case RingKind::Galois: {
      auto eng = std::make_unique<GaloisEngine>();
      eng->M = u64(ipow128(p, m));
      eng->r = r;
      eng->h.assign(pres.h.begin(), pres.h.end());
      for (auto& c : eng->h) c %= eng->M;
      eng->radices.assign(r, u32(eng->M));
      return eng;
    }
    case RingKind::Truncated: {
      auto eng = std::make_unique<TruncatedEngine>();
      eng->p = p;
      eng->r = r;
      eng->e = pres.e;
      eng->hbar.assign(pres.h.begin(), pres.h.end());
      for (auto& c : eng->hbar) c %= p;
      eng->radices.assign(std::size_t(pres.e) * r, p);
      return eng;
    }
    case RingKind::Eisenstein: {
      auto eng = std::make_unique<EisensteinEngine>();
      eng->M = u64(ipow128(p, m));
      eng->M2 = u64(ipow128(p, m - 1));
      eng->p = p;
      eng->r = r;
      eng->t = pres.t;
      eng->s = pres.s;
      eng->h.assign(pres.h.begin(), pres.h.end());
      for (auto& c : eng->h) c %= eng->M;
      eng->w.assign(pres.w.begin(), pres.w.end());
      for (auto& c : eng->w) c %= eng->M;
      eng->radices.resize(std::size_t(pres.t) * r);
      for (u32 i = 0; i < pres.t; ++i)
        for (u32 k = 0; k < r; ++k)
          eng->radices[std::size_t(i) * r + k] = u32(i < pres.s ? eng->M : eng->M2);
      return eng;
    }
  }
  raise(ErrorCode::Internal, "unknown ring kind");
}

ElemId encode_digits(const Digits& d, const std::vector<u32>& radices) {
  u64 id = 0, place = 1;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    id += d[k] * place;
    place *= radices[k];
  }
  return ElemId(id);
}

void decode_digits(ElemId a, const std::vector<u32>& radices, Digits& out) {
  u64 v = a;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    out[k] = v % radices[k];
    v /= radices[k];
  }
}

}  // namespace

const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::Galois: return "galois";
    case RingKind::Truncated: return "truncated";
    case RingKind::Eisenstein: return "eisenstein";
  }
  return "?";
}

std::uint64_t RingPresentation::size() const {
  u128 sz = 0;
  switch (kind) {
    case RingKind::Galois: sz = ipow128(p, m * r); break;
    case RingKind::Truncated: sz = ipow128(p, e * r); break;
    case RingKind::Eisenstein: sz = ipow128(p, ((m - 1) * t + s) * r); break;
  }
  if (sz > u128(1) << 62) raise(ErrorCode::SizeBoundExceeded, "ring size overflows");
  return u64(sz);
}

void RingPresentation::validate() const {
  if (!is_prime(p)) raise(ErrorCode::BadArgument, "p must be prime");
  if (r < 1) raise(ErrorCode::BadArgument, "r must be >= 1");
  switch (kind) {
    case RingKind::Galois:
      if (m < 1) raise(ErrorCode::BadArgument, "m must be >= 1");
      break;
    case RingKind::Truncated:
      if (e < 1) raise(ErrorCode::BadArgument, "e must be >= 1");
      break;
    case RingKind::Eisenstein:
      if (m < 1) raise(ErrorCode::BadArgument, "m must be >= 1");
      if (t < 1) raise(ErrorCode::BadArgument, "t must be >= 1");
      if (s < 1 || s > t) raise(ErrorCode::BadArgument, "s must satisfy 1 <= s <= t");
      if (w.size() > t) raise(ErrorCode::BadArgument, "w must have degree < t");
      break;
  }
  if (h.empty()) {
    if (r != 1) raise(ErrorCode::BadArgument, "h is required when r > 1");
  } else {
    if (h.size() != std::size_t(r) + 1 || h.back() % p == 0)
      raise(ErrorCode::BadArgument, "h must be monic of degree r");
    auto hbar = poly_mod_p(h, p);
    if (hbar.size() != std::size_t(r) + 1)
      raise(ErrorCode::NotBasicIrreducible, "h mod p drops degree");
    if (h.back() != 1) raise(ErrorCode::BadArgument, "h must be monic (leading coefficient 1)");
    if (!is_irreducible_fp(hbar, p))
      raise(ErrorCode::NotBasicIrreducible, "h mod p is reducible over F_p");
  }
}

std::string RingPresentation::describe() const {
  std::ostringstream os;
  os << ring_kind_name(kind) << "(p=" << p;
  if (kind != RingKind::Truncated) os << ", m=" << m;
  os << ", r=" << r;
  if (kind == RingKind::Truncated) os << ", e=" << e;
  if (kind == RingKind::Eisenstein) {
    os << ", t=" << t << ", s=" << s << ", w=[";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "]";
  }
  if (!h.empty()) {
    os << ", h=[";
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << "]";
  }
  os << ")";
  return os.str();
}

RingPtr ChainRing::build(const RingPresentation& pres) {
  return RingPtr(new ChainRing(pres));
}

ChainRing::ChainRing(const RingPresentation& pres_in) : pres_(pres_in) {
  pres_.validate();
  if (pres_.h.empty()) pres_.h = {0, 1};  // default modulus x for r = 1
  if (pres_.kind == RingKind::Eisenstein && pres_.w.empty()) pres_.w = {1};

  const u64 sz = pres_.size();
  if (sz > pres_.size_bound)
    raise(ErrorCode::SizeBoundExceeded,
          "|R| = " + std::to_string(sz) + " exceeds bound " + std::to_string(pres_.size_bound));
  if (sz > 65535) raise(ErrorCode::SizeBoundExceeded, "|R| must be <= 65535");
  size_ = sz;
  p_ = pres_.p;

  auto eng = make_engine(pres_);
  radices_ = eng->radices;

  // decode every element once
  std::vector<Digits> elems(size_, Digits(radices_.size()));
  for (u64 a = 0; a < size_; ++a) decode_digits(ElemId(a), radices_, elems[a]);

  add_.resize(size_ * size_);
  mul_.resize(size_ * size_);
  neg_.resize(size_);
  Digits tmp(radices_.size());
  for (u64 a = 0; a < size_; ++a) {
    eng->neg(elems[a], tmp);
    neg_[a] = std::uint16_t(encode_digits(tmp, radices_));
    for (u64 b = 0; b < size_; ++b) {
      eng->add(elems[a], elems[b], tmp);
      add_[a * size_ + b] = std::uint16_t(encode_digits(tmp, radices_));
      eng->mul(elems[a], elems[b], tmp);
      mul_[a * size_ + b] = std::uint16_t(encode_digits(tmp, radices_));
    }
  }

  // distinguished elements
  {
    Digits d(radices_.size(), 0);
    d[0] = 1;
    one_ = encode_digits(d, radices_);
  }
  switch (pres_.kind) {
    case RingKind::Galois:
      gamma_ = from_integer(p_);
      break;
    case RingKind::Truncated:
    case RingKind::Eisenstein: {
      Digits d(radices_.size(), 0);
      if (radices_.size() > std::size_t(pres_.r)) {
        d[pres_.r] = 1;  // the generator u
        gamma_ = encode_digits(d, radices_);
      } else {
        // t = 1: u collapses into the base via u = p*w(u) = p*w_0
        gamma_ = mul(from_integer(p_), from_integer(pres_.w.empty() ? 1 : pres_.w[0]));
      }
      break;
    }
  }

  verify_tables();
  compute_units();
  compute_chain_structure();
  compute_teichmuller();
}

void ChainRing::verify_tables() const {
  const u64 n = size_;
  // identities and negation
  for (u64 a = 0; a < n; ++a) {
    if (add(ElemId(a), 0) != a) raise(ErrorCode::NotAChainRing, "0 is not an additive identity");
    if (mul(ElemId(a), one_) != a) raise(ErrorCode::NotAChainRing, "1 is not a multiplicative identity");
    if (add(ElemId(a), neg(ElemId(a))) != 0) raise(ErrorCode::NotAChainRing, "negation is broken");
  }
  // commutativity
  for (u64 a = 0; a < n; ++a)
    for (u64 b = a + 1; b < n; ++b) {
      if (add(ElemId(a), ElemId(b)) != add(ElemId(b), ElemId(a)))
        raise(ErrorCode::NotAChainRing, "addition is not commutative");
      if (mul(ElemId(a), ElemId(b)) != mul(ElemId(b), ElemId(a)))
        raise(ErrorCode::NotAChainRing, "multiplication is not commutative");
    }
  // associativity and distributivity: full check at small sizes, a fixed
  // deterministic sample beyond that (table construction is mechanical, the
  // chain-structure checks below are always exhaustive)
  auto check_triple = [&](u64 a, u64 b, u64 c) {
    ElemId A = ElemId(a), B = ElemId(b), C = ElemId(c);
    if (add(add(A, B), C) != add(A, add(B, C)))
      raise(ErrorCode::NotAChainRing, "addition is not associative");
    if (mul(mul(A, B), C) != mul(A, mul(B, C)))
      raise(ErrorCode::NotAChainRing, "multiplication is not associative");
    if (mul(A, add(B, C)) != add(mul(A, B), mul(A, C)))
      raise(ErrorCode::NotAChainRing, "multiplication does not distribute");
  };
  if (n <= 512) {
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b)
        for (u64 c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 200000; ++i)
      check_triple(rng() % n, rng() % n, rng() % n);
  }
}

void ChainRing::compute_units() {
  const u64 n = size_;
  inv_.assign(n, kNoInverse);
  for (u64 a = 0; a < n; ++a) {
    for (u64 b = 0; b < n; ++b)
      if (mul(ElemId(a), ElemId(b)) == one_) {
        inv_[a] = std::uint16_t(b);
        break;
      }
    if (inv_[a] != kNoInverse) units_.push_back(ElemId(a));
  }
}

void ChainRing::compute_chain_structure() {
  const u64 n = size_;

  // gamma powers and nilpotency index; gamma_pows_[i] = gamma^i
  gamma_pows_.assign(1, one_);
  while (gamma_pows_.back() != 0) {
    gamma_pows_.push_back(mul(gamma_pows_.back(), gamma_));
    if (gamma_pows_.size() > 200) raise(ErrorCode::NotAChainRing, "gamma is not nilpotent");
  }
  e_ = u32(gamma_pows_.size() - 1);
  if (e_ >= 1 && gamma_pows_[e_ - 1] == 0)
    raise(ErrorCode::Internal, "nilpotency index miscomputed");

  // the ideals gamma^i R
  std::vector<std::vector<std::uint8_t>> in_pow(e_ + 1, std::vector<std::uint8_t>(n, 0));
  std::vector<u64> pow_size(e_ + 1, 0);
  for (u32 i = 0; i <= e_; ++i) {
    for (u64 x = 0; x < n; ++x) {
      ElemId v = mul(gamma_pows_[i], ElemId(x));
      if (!in_pow[i][v]) {
        in_pow[i][v] = 1;
        ++pow_size[i];
      }
    }
  }

  // non-units must be exactly gamma R (the unique maximal ideal)
  for (u64 a = 0; a < n; ++a) {
    bool unit = is_unit(ElemId(a));
    if (unit == bool(in_pow[1][a]))
      raise(ErrorCode::NotAChainRing, "non-units do not coincide with gamma*R");
  }
  // maximal ideal closed under addition and under multiplication by anything
  for (u64 a = 0; a < n; ++a) {
    if (in_pow[1][a]) {
      for (u64 b = 0; b < n; ++b) {
        if (in_pow[1][b] && !in_pow[1][add(ElemId(a), ElemId(b))])
          raise(ErrorCode::NotAChainRing, "maximal ideal is not closed under addition");
        if (!in_pow[1][mul(ElemId(a), ElemId(b))])
          raise(ErrorCode::NotAChainRing, "maximal ideal is not an ideal");
      }
    }
  }

  // residue field size and invariants |R| = q^e, |R^x| = q^{e-1}(q-1)
  if (pow_size[1] == 0 || n % pow_size[1] != 0)
    raise(ErrorCode::NotAChainRing, "residue field size is not well-defined");
  q_ = n / pow_size[1];
  u64 qq = q_;
  r_ = 0;
  while (qq > 1 && qq % p_ == 0) {
    qq /= p_;
    ++r_;
  }
  if (qq != 1 || r_ == 0) raise(ErrorCode::NotAChainRing, "residue field size is not a power of p");
  if (ipow128(q_, e_) != u128(n)) raise(ErrorCode::NotAChainRing, "|R| != q^e");
  if (u128(units_.size()) != ipow128(q_, e_ - 1) * (q_ - 1))
    raise(ErrorCode::NotAChainRing, "unit count != q^{e-1}(q-1)");

  // strictly decreasing chain with |gamma^i R| = q^{e-i}
  for (u32 i = 0; i <= e_; ++i)
    if (u128(pow_size[i]) != ipow128(q_, e_ - i))
      raise(ErrorCode::NotAChainRing, "ideal chain sizes are wrong");

  // valuation and the factorization a = unit * gamma^v
  val_.assign(n, 0);
  std::vector<std::vector<std::uint8_t>> unit_times(e_ + 1, std::vector<std::uint8_t>(n, 0));
  for (u32 i = 0; i <= e_; ++i)
    for (ElemId u : units_) unit_times[i][mul(u, gamma_pows_[i])] = 1;
  for (u64 a = 0; a < n; ++a) {
    u32 v = 0;
    while (v < e_ && in_pow[v + 1][a]) ++v;
    val_[a] = (a == 0) ? e_ : v;
    if (a != 0 && !unit_times[val_[a]][a])
      raise(ErrorCode::NotAChainRing, "element is not unit * gamma^v");
  }

  // gamma-division table (some preimage under multiplication by gamma)
  gdiv_.assign(n, kNoInverse);
  for (u64 c = 0; c < n; ++c) {
    ElemId y = mul(gamma_, ElemId(c));
    if (gdiv_[y] == kNoInverse) gdiv_[y] = std::uint16_t(c);
  }

  // 1 + gamma R
  u_member_.assign(n, 0);
  for (u64 x = 0; x < n; ++x)
    if (in_pow[1][x]) {
      ElemId v = add(one_, ElemId(x));
      if (!u_member_[v]) {
        u_member_[v] = 1;
        one_plus_gamma_.push_back(v);
      }
    }
  std::sort(one_plus_gamma_.begin(), one_plus_gamma_.end());
  if (u128(one_plus_gamma_.size()) != ipow128(q_, e_ - 1))
    raise(ErrorCode::NotAChainRing, "|1 + gamma R| != q^{e-1}");
}

void ChainRing::compute_teichmuller() {
  const u64 n = size_;
  // fixed points of x -> x^q
  for (u64 a = 0; a < n; ++a)
    if (pow(ElemId(a), q_) == a) teich_.push_back(ElemId(a));
  std::sort(teich_.begin(), teich_.end());
  if (u64(teich_.size()) != q_) raise(ErrorCode::NotAChainRing, "|T| != q");
  for (ElemId t : teich_)
    if (t != 0) {
      teich_star_.push_back(t);
      if (!is_unit(t) || pow(t, q_ - 1) != one_)
        raise(ErrorCode::NotAChainRing, "Teichmüller element with xi^{q-1} != 1");
      if (u_member_[t] && t != one_)
        raise(ErrorCode::NotAChainRing, "T* meets 1+gamma R beyond 1");
    }

  // representative of each element: iterate the q-power map to its fixed point
  residue_rep_.assign(n, 0);
  for (u64 a = 0; a < n; ++a) {
    ElemId y = ElemId(a);
    int guard = 0;
    while (pow(y, q_) != y) {
      y = pow(y, q_);
      if (++guard > 200) raise(ErrorCode::NotAChainRing, "q-power iteration does not stabilize");
    }
    residue_rep_[a] = y;
    if (is_unit(add(ElemId(a), neg(y))))
      raise(ErrorCode::NotAChainRing, "residue representative differs by a unit");
  }
  // distinct Teichmüller elements represent distinct classes
  for (std::size_t i = 0; i < teich_.size(); ++i)
    for (std::size_t j = i + 1; j < teich_.size(); ++j)
      if (!is_unit(sub(teich_[i], teich_[j])))
        raise(ErrorCode::NotAChainRing, "two Teichmüller elements share a residue class");

  residue_idx_.assign(n, 0);
  std::vector<u32> pos(n, 0);
  for (std::size_t i = 0; i < teich_.size(); ++i) pos[teich_[i]] = u32(i);
  for (u64 a = 0; a < n; ++a) residue_idx_[a] = pos[residue_rep_[a]];

  // the projection is a ring homomorphism with kernel gamma R
  for (u64 a = 0; a < n; ++a) {
    if ((residue_rep_[a] == 0) != !is_unit(ElemId(a)))
      raise(ErrorCode::NotAChainRing, "projection kernel is not gamma R");
    for (u64 b = 0; b < n; ++b) {
      ElemId s1 = residue_rep_[add(ElemId(a), ElemId(b))];
      ElemId s2 = residue_rep_[add(residue_rep_[a], residue_rep_[b])];
      if (s1 != s2) raise(ErrorCode::NotAChainRing, "projection is not additive");
      ElemId m1 = residue_rep_[mul(ElemId(a), ElemId(b))];
      ElemId m2 = residue_rep_[mul(residue_rep_[a], residue_rep_[b])];
      if (m1 != m2) raise(ErrorCode::NotAChainRing, "projection is not multiplicative");
    }
  }
}

ElemId ChainRing::pow(ElemId a, std::uint64_t k) const {
  ElemId acc = one_, base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

ElemId ChainRing::inv(ElemId a) const {
  if (!is_unit(a)) raise(ErrorCode::NotAUnit, "element " + to_string(a) + " is not a unit");
  return inv_[a];
}

ElemId ChainRing::gamma_pow(std::uint32_t i) const {
  if (i > e_) return 0;
  return gamma_pows_[i];
}

ElemId ChainRing::teichmuller_lift(std::uint32_t residue_index) const {
  if (residue_index >= teich_.size()) raise(ErrorCode::BadArgument, "residue index out of range");
  return teich_[residue_index];
}

std::pair<ElemId, ElemId> ChainRing::unit_decompose(ElemId a) const {
  if (!is_unit(a)) raise(ErrorCode::NotAUnit, "unit_decompose requires a unit");
  ElemId xi = residue_rep_[a];
  ElemId u = mul(inv_[xi], a);
  return {xi, u};
}

std::uint64_t ChainRing::multiplicative_order(ElemId a) const {
  if (!is_unit(a)) raise(ErrorCode::NotAUnit, "order of a non-unit");
  ElemId x = a;
  std::uint64_t k = 1;
  while (x != one_) {
    x = mul(x, a);
    ++k;
    if (k > size_) raise(ErrorCode::Internal, "order computation diverged");
  }
  return k;
}

ElemId ChainRing::gamma_preimage(ElemId y) const {
  if (gdiv_[y] == kNoInverse) raise(ErrorCode::BadArgument, "element is not in gamma R");
  return gdiv_[y];
}

std::vector<std::uint32_t> ChainRing::coords(ElemId a) const {
  Digits d(radices_.size());
  decode_digits(a, radices_, d);
  return std::vector<std::uint32_t>(d.begin(), d.end());
}

ElemId ChainRing::from_coords(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > radices_.size())
    raise(ErrorCode::BadArgument, "too many coordinates for this ring");
  Digits d(radices_.size(), 0);
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] >= radices_[k])
      raise(ErrorCode::BadArgument, "coordinate " + std::to_string(digits[k]) +
                                        " out of range (radix " + std::to_string(radices_[k]) + ")");
    d[k] = digits[k];
  }
  return encode_digits(d, radices_);
}

ElemId ChainRing::from_integer(std::uint64_t c) const {
  return from_coords({std::uint32_t(c % radices_[0])});
}

std::string ChainRing::to_string(ElemId a) const {
  if (a == 0) return "0";
  auto cs = coords(a);
  const u32 r = pres_.r;
  const bool has_u = pres_.kind != RingKind::Galois;
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    u32 upow = has_u ? u32(k / r) : 0;
    u32 wpow = u32(k % r);
    if (!first) os << "+";
    first = false;
    bool has_sym = upow > 0 || wpow > 0;
    if (cs[k] != 1 || !has_sym) os << cs[k];
    if (wpow >= 1) {
      os << "w";
      if (wpow > 1) os << "^" << wpow;
    }
    if (upow >= 1) {
      os << "u";
      if (upow > 1) os << "^" << upow;
    }
  }
  return os.str();
}

}  // namespace skewpc
