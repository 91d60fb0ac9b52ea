#include "skewpc/automorphism.hpp"

#include <algorithm>
#include <numeric>

namespace skewpc {

namespace {

// gamma-adic Teichmüller digits of a: a = sum gamma^i xi_i with xi_i in T.
// The digits are independent of the preimage chosen when dividing by gamma.
std::vector<ElemId> teich_digits(const ChainRing& R, ElemId a) {
  std::vector<ElemId> digits(R.e());
  ElemId b = a;
  for (std::uint32_t i = 0; i < R.e(); ++i) {
    digits[i] = R.residue_project(b);
    b = R.gamma_preimage(R.sub(b, digits[i]));
  }
  return digits;
}

}  // namespace

RingAutomorphism::RingAutomorphism(RingPtr ring, std::vector<ElemId> image)
    : ring_(std::move(ring)), image_(std::move(image)) {}

SigmaPtr RingAutomorphism::identity(RingPtr ring) {
  std::vector<ElemId> image(ring->size());
  std::iota(image.begin(), image.end(), 0);
  std::shared_ptr<RingAutomorphism> s(new RingAutomorphism(std::move(ring), std::move(image)));
  s->finalize();
  return s;
}

SigmaPtr RingAutomorphism::build(RingPtr ring, const AutomorphismSpec& spec) {
  const ChainRing& R = *ring;
  const std::uint64_t j = spec.omega_exponent.value_or(1);
  if (j == 0) raise(ErrorCode::BadArgument, "omega exponent must be >= 1");
  if (spec.u_image && R.presentation().kind == RingKind::Galois)
    raise(ErrorCode::BadArgument, "a galois presentation has no u generator");
  ElemId g_img = spec.u_image ? R.from_coords(*spec.u_image) : R.gamma();
  if (R.valuation(g_img) != 1 && R.e() > 1)
    raise(ErrorCode::NotAnAutomorphism,
          "image of the maximal-ideal generator must generate the maximal ideal");

  // close over the ring: sigma(sum gamma^i xi_i) = sum g_img^i xi_i^j
  std::vector<ElemId> image(R.size());
  for (std::uint64_t a = 0; a < R.size(); ++a) {
    auto digits = teich_digits(R, ElemId(a));
    ElemId acc = R.zero(), check = R.zero();
    ElemId gpow = R.one(), cpow = R.one();
    for (std::uint32_t i = 0; i < R.e(); ++i) {
      acc = R.add(acc, R.mul(gpow, R.pow(digits[i], j)));
      check = R.add(check, R.mul(cpow, digits[i]));
      gpow = R.mul(gpow, g_img);
      cpow = R.mul(cpow, R.gamma());
    }
    if (check != a) raise(ErrorCode::Internal, "Teichmüller expansion does not reconstruct");
    image[a] = acc;
  }

  std::shared_ptr<RingAutomorphism> s(new RingAutomorphism(std::move(ring), std::move(image)));
  s->finalize();
  return s;
}

void RingAutomorphism::finalize() {
  const ChainRing& R = *ring_;
  const std::uint64_t n = R.size();

  // exhaustive validation: bijection preserving both operations, fixing 0, 1
  std::vector<std::uint8_t> seen(n, 0);
  for (std::uint64_t a = 0; a < n; ++a) {
    if (seen[image_[a]]) raise(ErrorCode::NotAnAutomorphism, "map is not injective");
    seen[image_[a]] = 1;
  }
  if (image_[R.zero()] != R.zero() || image_[R.one()] != R.one())
    raise(ErrorCode::NotAnAutomorphism, "map does not fix 0 and 1");
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      if (image_[R.add(ElemId(a), ElemId(b))] != R.add(image_[a], image_[b]))
        raise(ErrorCode::NotAnAutomorphism, "map is not additive");
      if (image_[R.mul(ElemId(a), ElemId(b))] != R.mul(image_[a], image_[b]))
        raise(ErrorCode::NotAnAutomorphism, "map is not multiplicative");
    }

  // order and the permutations sigma^i
  powers_.clear();
  std::vector<ElemId> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  powers_.push_back(ident);
  std::vector<ElemId> cur = image_;
  while (cur != ident) {
    powers_.push_back(cur);
    std::vector<ElemId> next(n);
    for (std::uint64_t a = 0; a < n; ++a) next[a] = image_[cur[a]];
    cur = std::move(next);
    if (powers_.size() > n) raise(ErrorCode::Internal, "automorphism order diverged");
  }
  mu_ = std::uint32_t(powers_.size());

  // sigma stabilizes T* and 1 + gamma R
  for (ElemId xi : R.teichmuller_star())
    if (std::find(R.teichmuller_star().begin(), R.teichmuller_star().end(), image_[xi]) ==
        R.teichmuller_star().end())
      raise(ErrorCode::Internal, "sigma does not stabilize T*");
  for (ElemId u : R.unit_one_plus_gamma())
    if (!R.in_one_plus_gamma(image_[u]))
      raise(ErrorCode::Internal, "sigma does not stabilize 1 + gamma R");
  if (R.e() > 1 && R.valuation(image_[R.gamma()]) != 1)
    raise(ErrorCode::Internal, "sigma(gamma) is not an associate of gamma");

  // induced permutation of residue classes and its order
  std::vector<std::uint32_t> resperm(R.q());
  for (std::uint32_t i = 0; i < R.q(); ++i)
    resperm[i] = R.residue_index(image_[R.teichmuller_lift(i)]);
  for (std::uint64_t a = 0; a < n; ++a)
    if (R.residue_index(image_[a]) != resperm[R.residue_index(ElemId(a))])
      raise(ErrorCode::Internal, "induced residue map is not well-defined");
  {
    std::vector<std::uint32_t> ident_q(R.q()), curq = resperm;
    std::iota(ident_q.begin(), ident_q.end(), 0);
    residue_order_ = 1;
    while (curq != ident_q) {
      std::vector<std::uint32_t> next(R.q());
      for (std::uint32_t i = 0; i < R.q(); ++i) next[i] = resperm[curq[i]];
      curq = std::move(next);
      ++residue_order_;
      if (residue_order_ > R.q()) raise(ErrorCode::Internal, "residue order diverged");
    }
  }
  if (mu_ % residue_order_ != 0)
    raise(ErrorCode::Internal, "order of the residue map does not divide the order of sigma");

  // Teichmüller exponent: the unique k in {0..r-1} with sigma(xi) = xi^{p^k}
  bool found = false;
  for (std::uint32_t k = 0; k < R.r() && !found; ++k) {
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= R.p();
    bool ok = true;
    for (ElemId xi : R.teichmuller_star())
      if (image_[xi] != R.pow(xi, pk)) { ok = false; break; }
    if (ok) {
      teich_k_ = k;
      found = true;
    }
  }
  if (!found) raise(ErrorCode::Internal, "no Frobenius exponent matches sigma on T*");

  for (std::uint64_t a = 0; a < n; ++a)
    if (image_[a] == a) {
      fixed_.push_back(ElemId(a));
      if (R.is_unit(ElemId(a))) fixed_units_.push_back(ElemId(a));
    }

  norm_cache_.assign(n, {});
}

ElemId RingAutomorphism::norm(ElemId beta, std::uint64_t i) const {
  if (beta >= ring_->size()) raise(ErrorCode::BadArgument, "element id out of range");
  if (i > 1000000) raise(ErrorCode::BadArgument, "norm index too large");
  std::lock_guard<std::mutex> lock(norm_mutex_);
  auto& cache = norm_cache_[beta];
  if (cache.empty()) cache.push_back(ring_->one());
  while (cache.size() <= i)
    cache.push_back(ring_->mul(image_[cache.back()], beta));
  return cache[i];
}

bool RingAutomorphism::same_map(const RingAutomorphism& other) const {
  return ring_.get() == other.ring_.get() && image_ == other.image_;
}

}  // namespace skewpc
