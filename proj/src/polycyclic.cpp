#include "skewpc/polycyclic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace skewpc {

namespace {

using u64 = std::uint64_t;

u64 vec_key(const CodeVector& v, u64 ring_size) {
  u64 key = 0, place = 1;
  for (ElemId c : v) {
    key += u64(c) * place;
    place *= ring_size;
  }
  return key;
}

CodeVector key_vec(u64 key, u64 ring_size, std::uint32_t n) {
  CodeVector v(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    v[i] = ElemId(key % ring_size);
    key /= ring_size;
  }
  return v;
}

std::uint32_t weight(const CodeVector& v) {
  std::uint32_t w = 0;
  for (ElemId c : v)
    if (c != 0) ++w;
  return w;
}

// membership structure: bitmap when |R|^n is small, hash set otherwise
struct VecSet {
  u64 ring_size;
  u64 total;  // |R|^n, or 0 when it exceeds 2^63
  std::vector<std::uint8_t> bitmap;
  std::unordered_set<u64> set;
  std::vector<CodeVector> list;

  VecSet(u64 rs, std::uint32_t n) : ring_size(rs) {
    unsigned __int128 t = 1;
    for (std::uint32_t i = 0; i < n; ++i) t *= rs;
    total = (t <= ((unsigned __int128)1 << 40)) ? u64(t) : 0;
    if (total) bitmap.assign(total, 0);
  }
  bool contains(u64 key) const { return total ? bool(bitmap[key]) : set.count(key) > 0; }
  bool insert(const CodeVector& v) {
    u64 key = vec_key(v, ring_size);
    if (total) {
      if (bitmap[key]) return false;
      bitmap[key] = 1;
    } else {
      if (!set.insert(key).second) return false;
    }
    list.push_back(v);
    return true;
  }
};

CodeVector scale(const ChainRing& R, ElemId r, const CodeVector& v) {
  CodeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.mul(r, v[i]);
  return out;
}

CodeVector vec_add(const ChainRing& R, const CodeVector& a, const CodeVector& b) {
  CodeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
  return out;
}

}  // namespace

void Trinomial::validate() const {
  if (n < 2) raise(ErrorCode::BadArgument, "trinomial degree must be >= 2");
  if (ell < 1 || ell > n - 1) raise(ErrorCode::DegreeMismatch, "ell must satisfy 1 <= ell <= n-1");
}

std::vector<ElemId> Trinomial::coeff_vector(const ChainRing&) const {
  validate();
  std::vector<ElemId> a(n, 0);
  a[0] = a0;
  a[ell] = a_ell;
  return a;
}

SkewPolynomial Trinomial::to_poly(const SigmaPtr& sigma) const {
  validate();
  const ChainRing& R = sigma->ring();
  std::vector<ElemId> cs(n + 1, 0);
  cs[n] = R.one();
  cs[ell] = R.neg(a_ell);
  cs[0] = R.neg(a0);
  return {sigma, std::move(cs)};
}

std::string Trinomial::to_string(const ChainRing& R) const {
  std::string al = R.to_string(a_ell), a0s = R.to_string(a0);
  if (al.find('+') != std::string::npos) al = "(" + al + ")";
  if (a0s.find('+') != std::string::npos) a0s = "(" + a0s + ")";
  std::string mid = a_ell == R.one() ? "" : al + " ";
  std::string xell = ell == 1 ? "x" : "x^" + std::to_string(ell);
  return "x^" + std::to_string(n) + " - (" + mid + xell + " + " + a0s + ")";
}

CodeVector polycyclic_shift(const RingAutomorphism& sigma, const CodeVector& c,
                            const std::vector<ElemId>& avec) {
  if (c.size() != avec.size()) raise(ErrorCode::LengthMismatch, "vector length != trinomial length");
  const ChainRing& R = sigma.ring();
  const std::size_t n = c.size();
  CodeVector out(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) out[i + 1] = sigma.apply(c[i]);
  const ElemId last = sigma.apply(c[n - 1]);
  for (std::size_t i = 0; i < n; ++i) out[i] = R.add(out[i], R.mul(last, avec[i]));
  return out;
}

std::vector<std::vector<ElemId>> companion_matrix(const ChainRing& R, const Trinomial& f) {
  f.validate();
  std::vector<std::vector<ElemId>> mat(f.n, std::vector<ElemId>(f.n, 0));
  for (std::uint32_t i = 0; i + 1 < f.n; ++i) mat[i][i + 1] = R.one();
  mat[f.n - 1] = f.coeff_vector(R);
  return mat;
}

CodeVector row_times_matrix(const ChainRing& R, const CodeVector& v,
                            const std::vector<std::vector<ElemId>>& mat) {
  if (v.size() != mat.size()) raise(ErrorCode::LengthMismatch, "vector/matrix size mismatch");
  CodeVector out(mat.empty() ? 0 : mat[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = R.add(out[j], R.mul(v[i], mat[i][j]));
  }
  return out;
}

std::vector<std::uint64_t> weight_distribution(const std::vector<CodeVector>& words,
                                               std::uint32_t n) {
  std::vector<std::uint64_t> wd(n + 1, 0);
  for (const auto& v : words) ++wd[weight(v)];
  return wd;
}

Code submodule_closure(const SigmaPtr& sigma, const Trinomial& f,
                       const std::vector<CodeVector>& generators, std::uint64_t budget) {
  f.validate();
  const ChainRing& R = sigma->ring();
  const auto avec = f.coeff_vector(R);

  VecSet span(R.size(), f.n);
  span.insert(CodeVector(f.n, 0));

  std::vector<CodeVector> queue = generators;
  for (const auto& g : queue) {
    if (g.size() != f.n) raise(ErrorCode::LengthMismatch, "generator length != n");
    for (ElemId c : g)
      if (c >= R.size()) raise(ErrorCode::BadArgument, "generator entry out of range");
  }

  std::size_t qi = 0;
  while (qi < queue.size()) {
    CodeVector g = queue[qi++];
    if (span.contains(vec_key(g, R.size()))) continue;
    // extend the span by the cosets of R*g
    const std::size_t base = span.list.size();
    for (u64 r = 0; r < R.size(); ++r) {
      CodeVector w = scale(R, ElemId(r), g);
      if (span.contains(vec_key(w, R.size()))) continue;
      for (std::size_t k = 0; k < base; ++k) {
        CodeVector sum = vec_add(R, span.list[k], w);
        span.insert(sum);
        if (span.list.size() > budget)
          raise(ErrorCode::BudgetExceeded,
                "submodule exceeds enumeration budget " + std::to_string(budget));
      }
    }
    queue.push_back(polycyclic_shift(*sigma, g, avec));
  }

  Code code;
  code.f = f;
  code.sigma = sigma;
  code.elements = std::move(span.list);  // span keeps its membership structure
  std::sort(code.elements.begin(), code.elements.end(),
            [&](const CodeVector& a, const CodeVector& b) {
              return vec_key(a, R.size()) < vec_key(b, R.size());
            });
  code.weight_distribution = weight_distribution(code.elements, f.n);

  // the construction closes under shifts; verify directly
  code.shift_closed = true;
  for (const auto& v : code.elements)
    if (!span.contains(vec_key(polycyclic_shift(*sigma, v, avec), R.size()))) {
      code.shift_closed = false;
      break;
    }
  if (!code.shift_closed) raise(ErrorCode::Internal, "closure is not shift-invariant");
  return code;
}

namespace {

// distinct singleton-generated codes, each with one generator that produces it
std::vector<std::pair<CodeVector, Code>> singleton_sweep(const SigmaPtr& sigma, const Trinomial& f,
                                                         std::uint64_t ambient_budget) {
  const ChainRing& R = sigma->ring();
  unsigned __int128 ambient = 1;
  for (std::uint32_t i = 0; i < f.n; ++i) ambient *= R.size();
  if (ambient > ambient_budget)
    raise(ErrorCode::BudgetExceeded, "ambient space exceeds the lattice budget");

  std::set<std::vector<u64>> seen;
  std::vector<std::pair<CodeVector, Code>> out;
  for (u64 key = 0; key < u64(ambient); ++key) {
    CodeVector gen = key_vec(key, R.size(), f.n);
    Code code = submodule_closure(sigma, f, {gen}, ambient_budget);
    std::vector<u64> keys;
    keys.reserve(code.elements.size());
    for (const auto& v : code.elements) keys.push_back(vec_key(v, R.size()));
    if (seen.insert(std::move(keys)).second) out.emplace_back(std::move(gen), std::move(code));
  }
  return out;
}

}  // namespace

std::vector<Code> singleton_generated_codes(const SigmaPtr& sigma, const Trinomial& f,
                                            std::uint64_t ambient_budget) {
  std::vector<Code> out;
  for (auto& [gen, code] : singleton_sweep(sigma, f, ambient_budget))
    out.push_back(std::move(code));
  return out;
}

QuotientElement phi_alpha(const QuotientElement& g, ElemId alpha, const QuotPtr& target) {
  if (!g.ctx || !target) raise(ErrorCode::BadArgument, "null quotient context");
  const ChainRing& R = g.ctx->ring();
  if (!g.ctx->sigma()->same_map(*target->sigma()))
    raise(ErrorCode::RingMismatch, "source and target live over different (R, sigma)");
  if (g.ctx->n() != target->n()) raise(ErrorCode::DegreeMismatch, "moduli have different degrees");
  if (!g.ctx->modulus_central() || !target->modulus_central())
    raise(ErrorCode::NotCentral, "both moduli must be central");
  if (!R.is_unit(alpha)) raise(ErrorCode::NotAUnit, "alpha must be a unit");
  return {target, substitute_alpha_x(g.value, alpha)};
}

IsometryReport verify_isometry(const SigmaPtr& sigma, ElemId alpha, const Trinomial& f1,
                               const Trinomial& f2, const IsometryOptions& opts) {
  const ChainRing& R = sigma->ring();
  const RingAutomorphism& S = *sigma;
  if (!R.is_unit(alpha)) raise(ErrorCode::NotAUnit, "alpha must be a unit");
  if (f1.n != f2.n) raise(ErrorCode::DegreeMismatch, "trinomials must have equal degree");
  const std::uint32_t n = f1.n;

  QuotPtr c1 = QuotientRing::make(f1.to_poly(sigma));
  QuotPtr c2 = QuotientRing::make(f2.to_poly(sigma));
  if (!c1->modulus_central())
    raise(ErrorCode::NotCentral, "source trinomial is not central: " + c1->centrality().detail);
  if (!c2->modulus_central())
    raise(ErrorCode::NotCentral, "target trinomial is not central: " + c2->centrality().detail);

  IsometryReport rep;
  rep.alpha = alpha;
  auto note = [&rep](const std::string& msg) {
    if (rep.violations.size() < 20) rep.violations.push_back(msg);
  };

  std::vector<ElemId> norms(n);
  bool norms_units = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    norms[i] = S.norm(alpha, i);
    norms_units = norms_units && R.is_unit(norms[i]);
  }
  if (!norms_units) note("some norm N_i(alpha) is not a unit");

  // well-definedness: the image of f1 vanishes in the target space
  {
    SkewPolynomial mapped = substitute_alpha_x(f1.to_poly(sigma), alpha);
    rep.well_defined = norms_units && reduce_mod(mapped, c2).value.is_zero();
    if (!rep.well_defined)
      note("phi_alpha(f1) does not vanish modulo f2");
  }

  // exact coefficient-wise arguments, valid for the whole space:
  // scaling by N_i(alpha) is a bijection of R that maps 0 and only 0 to 0
  rep.bijective = true;
  rep.weight_preserving = true;
  for (std::uint32_t i = 0; i < n && norms_units; ++i) {
    std::vector<std::uint8_t> hit(R.size(), 0);
    for (u64 c = 0; c < R.size(); ++c) {
      ElemId img = R.mul(ElemId(c), norms[i]);
      if (hit[img]) rep.bijective = false;
      hit[img] = 1;
      if ((c == 0) != (img == 0)) rep.weight_preserving = false;
    }
  }
  if (!norms_units) rep.bijective = rep.weight_preserving = false;

  const bool full_sweep = c1->size_fits_u64() && c1->size() <= opts.sweep_budget;
  rep.mode = full_sweep ? "full-quotient" : "singleton-ideals";

  if (full_sweep) {
    // belt over the structural argument: sweep every element once
    const u64 total = c1->size();
    std::vector<std::uint8_t> hit(total, 0);
    for (u64 key = 0; key < total; ++key) {
      CodeVector v = key_vec(key, R.size(), n);
      CodeVector img(n);
      std::uint32_t w1 = 0, w2 = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        img[i] = R.mul(v[i], norms[i]);
        w1 += v[i] != 0;
        w2 += img[i] != 0;
      }
      if (w1 != w2) {
        rep.weight_preserving = false;
        note("weight changes at element key " + std::to_string(key));
      }
      u64 ik = vec_key(img, R.size());
      if (hit[ik]) rep.bijective = false;
      hit[ik] = 1;
    }
    rep.elements_swept = total;
  }

  // ring-homomorphism checks.  Both products are biadditive and phi scales
  // coefficients, so multiplicativity on monomial pairs plus additivity is
  // conclusive; sampled general pairs guard the reduction path itself.
  auto phi_poly = [&](const SkewPolynomial& g) { return substitute_alpha_x(g, alpha); };
  rep.additive = true;
  rep.multiplicative = true;
  u64 pairs = 0;

  const u64 mono_count = R.size() * n;
  if (mono_count * mono_count <= (u64(1) << 26)) {
    for (u64 a = 0; a < R.size(); ++a)
      for (std::uint32_t i = 0; i < n; ++i) {
        SkewPolynomial ga = SkewPolynomial::monomial(sigma, ElemId(a), i);
        SkewPolynomial pga = phi_poly(ga);
        for (u64 b = 0; b < R.size(); ++b)
          for (std::uint32_t jj = 0; jj < n; ++jj) {
            SkewPolynomial gb = SkewPolynomial::monomial(sigma, ElemId(b), jj);
            SkewPolynomial lhs = reduce_mod(phi_poly(reduce_mod(ga * gb, c1).value), c2).value;
            SkewPolynomial rhs = reduce_mod(pga * phi_poly(gb), c2).value;
            ++pairs;
            if (!(lhs == rhs)) {
              rep.multiplicative = false;
              note("monomial pair breaks multiplicativity");
            }
          }
      }
  }

  std::mt19937_64 rng(0x5EEDED);
  for (u64 it = 0; it < opts.pair_samples; ++it) {
    std::vector<ElemId> ca(n), cb(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      ca[i] = ElemId(rng() % R.size());
      cb[i] = ElemId(rng() % R.size());
    }
    SkewPolynomial g(sigma, ca), h(sigma, cb);
    if (!(phi_poly(g + h) == phi_poly(g) + phi_poly(h))) {
      rep.additive = false;
      note("sampled pair breaks additivity");
    }
    SkewPolynomial lhs = reduce_mod(phi_poly(reduce_mod(g * h, c1).value), c2).value;
    SkewPolynomial rhs = reduce_mod(phi_poly(g) * phi_poly(h), c2).value;
    ++pairs;
    if (!(lhs == rhs)) {
      rep.multiplicative = false;
      note("sampled pair breaks multiplicativity");
    }
  }
  rep.pairs_checked = pairs;

  // images of singleton-generated left ideals are left ideals with the same
  // weight distribution.  For small ambient spaces the whole deduplicated
  // singleton lattice is checked; otherwise the gamma-power monomial family.
  if (opts.check_ideals) {
    const auto avec2 = f2.coeff_vector(R);

    auto check_ideal = [&](const std::string& label, const CodeVector& gen, const Code& ideal) {
      IdealCheck chk;
      chk.generator = label;
      chk.size = ideal.elements.size();
      chk.weights = ideal.weight_distribution;

      std::vector<CodeVector> image;
      image.reserve(ideal.elements.size());
      for (const auto& v : ideal.elements) {
        CodeVector img(n);
        for (std::uint32_t kk = 0; kk < n; ++kk) img[kk] = R.mul(v[kk], norms[kk]);
        image.push_back(std::move(img));
      }
      chk.weights_match = weight_distribution(image, n) == ideal.weight_distribution;

      VecSet img_set(R.size(), n);
      for (const auto& v : image) img_set.insert(v);
      chk.image_is_ideal = true;
      for (const auto& v : image) {
        if (!img_set.contains(vec_key(polycyclic_shift(S, v, avec2), R.size())))
          chk.image_is_ideal = false;
        for (u64 rr = 0; rr < R.size() && chk.image_is_ideal; ++rr)
          if (!img_set.contains(vec_key(scale(R, ElemId(rr), v), R.size())))
            chk.image_is_ideal = false;
        if (!chk.image_is_ideal) break;
      }

      CodeVector gen_img(n);
      for (std::uint32_t kk = 0; kk < n; ++kk) gen_img[kk] = R.mul(gen[kk], norms[kk]);
      try {
        Code regen = submodule_closure(sigma, f2, {gen_img}, opts.closure_budget);
        chk.image_matches_generated =
            regen.elements.size() == image.size() &&
            std::all_of(regen.elements.begin(), regen.elements.end(), [&](const CodeVector& v) {
              return img_set.contains(vec_key(v, R.size()));
            });
      } catch (const Error& err) {
        if (err.code() != ErrorCode::BudgetExceeded) throw;
        chk.image_matches_generated = false;
      }

      if (!chk.weights_match || !chk.image_is_ideal || !chk.image_matches_generated)
        note("ideal check failed for generator " + chk.generator);
      rep.ideals.push_back(std::move(chk));
    };

    const bool full_lattice = c1->size_fits_u64() && c1->size() <= opts.lattice_budget;
    if (full_lattice) {
      for (const auto& [gen, ideal] : singleton_sweep(sigma, f1, opts.lattice_budget))
        check_ideal(SkewPolynomial(sigma, gen).to_string(), gen, ideal);
    } else {
      for (std::uint32_t j = 1; j < R.e(); ++j)
        for (std::uint32_t i = 0; i < n; ++i) {
          CodeVector gen(n, 0);
          gen[i] = R.gamma_pow(j);
          std::string label = R.to_string(R.gamma_pow(j)) + " x^" + std::to_string(i);
          try {
            Code ideal = submodule_closure(sigma, f1, {gen}, opts.closure_budget);
            check_ideal(label, gen, ideal);
          } catch (const Error& err) {
            if (err.code() != ErrorCode::BudgetExceeded) throw;
            IdealCheck chk;
            chk.generator = label;
            chk.skipped = true;
            rep.ideals.push_back(std::move(chk));
          }
        }
    }
  }

  bool ideals_ok = std::all_of(rep.ideals.begin(), rep.ideals.end(), [](const IdealCheck& c) {
    return c.skipped || (c.weights_match && c.image_is_ideal && c.image_matches_generated);
  });
  rep.verdict = rep.well_defined && rep.bijective && rep.weight_preserving && rep.additive &&
                rep.multiplicative && ideals_ok;
  return rep;
}

}  // namespace skewpc
