// Acceptance suite: end-to-end checks of the library against the bundled
// worked examples and the exhaustive property batteries.  Prints one line
// per criterion; the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewpc/class_counting.hpp"
#include "skewpc/job.hpp"
#include "test_support.hpp"

using namespace skewpc;
using namespace skewpc::testing;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(std::string&)> run;  // throws or appends to the failure log
};

void require(bool cond, const std::string& what, std::string& log) {
  if (!cond) log += "    failed: " + what + "\n";
}

// ---- criterion 1: quaternary example, norms and equivalence -------------

void criterion1(std::string& log) {
  const ChainRing& R = *z8u();
  const RingAutomorphism& S = *z8u_sigma();
  const ElemId alpha = R.from_coords({1, 1});

  require(S.norm(alpha, 2) == R.from_integer(7), "N_2(1+u) == 7", log);
  require(S.norm(alpha, 4) == R.one(), "N_4(1+u) == 1", log);

  Binomial a{2, R.from_integer(7), R.one()}, b{2, R.one(), R.one()};
  EquivalenceReport rep = equivalent(z8u_sigma(), a, b, 4);
  require(rep.verdict, "7x^2+1 equivalent to x^2+1 at n = 4", log);
  require(rep.witness_alpha.has_value(), "witness exists", log);
  if (rep.witness_alpha) {
    ElemId w = *rep.witness_alpha;
    require(R.mul(b.a0, S.norm(w, 4)) == a.a0, "witness satisfies a0 = b0 N_4(alpha)", log);
    require(R.mul(b.a_ell, S.norm(S.apply_pow(w, 2), 2)) == a.a_ell,
            "witness satisfies aell = bell N_2(sigma^2(alpha))", log);
  }
}

// ---- criterion 2: quaternary example, kernel sizes and image ------------

void criterion2(std::string& log) {
  const ChainRing& R = *z8u();
  require(R.unit_one_plus_gamma().size() == 16, "|U| == 16", log);

  CountReport rep = h_size_report(*z8u_sigma(), 4, 2);
  require(rep.decomposition.orders == std::vector<std::uint64_t>{4, 2, 2},
          "U invariant factors (4,2,2)", log);
  require(rep.ker_U == 8, "ker over U == 8", log);
  require(rep.ker_T == 1, "ker over T* == 1", log);
  require(rep.brute_ker == 8, "brute kernel == 8", log);
  require(rep.H_size == 2, "image size == 16/8 == 2", log);
  require(rep.consistent, "formula equals brute force", log);

  auto H = theta_image(*z8u_sigma(), 4, 2);
  require(H.size() == 2, "image has two members", log);
  require(H == std::vector<Binomial>{{2, R.one(), R.one()}, {2, R.from_integer(7), R.one()}},
          "image == {x^2+1, 7x^2+1}", log);
}

// ---- criterion 3: the two counterexample reproductions ------------------

void criterion3(std::string& log) {
  {
    const ChainRing& R = *f27();
    const SigmaPtr& s = f27_sigma();
    const ElemId u2 = R.mul(R.gamma(), R.gamma());
    Trinomial f{2, 1, u2, R.zero()};
    require(is_central(f.to_poly(s)).central, "x^2 - u^2 x is central", log);
    require(!in_fixed_support_set(*s, {R.zero(), R.neg(u2)}), "(0, -u^2) outside the support set", log);
  }
  {
    const ChainRing& R = *gr42();
    const SigmaPtr& s = gr42_frobenius();
    const ElemId w = R.from_coords({0, 1});
    Binomial th = theta(*s, w, 3, 2);
    require(th.a_ell == w && th.a0 == w, "theta(w) has both coefficients w", log);
    require(!in_schur_group(*s, th), "theta(w) outside the binomial group", log);
  }
}

// ---- criterion 4: the seven norm identities, exhaustively ----------------

void criterion4(std::string& log) {
  std::uint64_t violations = 0;
  for (const SigmaPtr& s : {z8u_sigma(), gr42_frobenius(), f27_sigma()}) {
    const ChainRing& R = s->ring();
    const RingAutomorphism& S = *s;
    const std::uint32_t mu = S.order();
    for (ElemId beta = 0; beta < R.size(); ++beta) {
      for (std::uint64_t i = 0; i <= 8; ++i) {
        ElemId ni = S.norm(beta, i);
        // (1) product form
        ElemId prod = R.one();
        for (std::uint64_t t = 0; t < i; ++t) prod = R.mul(prod, S.apply_pow(beta, t));
        violations += ni != prod;
        // (2) units and inverse compatibility
        if (R.is_unit(beta)) {
          violations += !R.is_unit(ni);
          violations += S.norm(R.inv(beta), i) != R.inv(ni);
        }
        // (4) splitting, both forms, and (5) the recursion step
        for (std::uint64_t j = 0; j <= 8; ++j) {
          violations += S.norm(beta, i + j) != R.mul(S.apply_pow(ni, j), S.norm(beta, j));
          violations +=
              S.norm(beta, i + j) != R.mul(S.norm(S.apply_pow(beta, j), i), S.norm(beta, j));
        }
        violations += R.mul(S.apply_pow(beta, i), ni) != S.norm(beta, i + 1);
        violations += R.mul(S.apply(ni), beta) != S.norm(beta, i + 1);
        // (6) (beta x)^i = N_i(beta) x^i under the twisted product
        SkewPolynomial bx = SkewPolynomial::monomial(s, beta, 1);
        SkewPolynomial acc = SkewPolynomial::constant(s, R.one());
        for (std::uint64_t t = 0; t < i; ++t) acc = acc * bx;
        SkewPolynomial expect =
            (i == 0 || ni != 0)
                ? SkewPolynomial::monomial(s, ni, std::uint32_t(i))
                : SkewPolynomial::zero(s);
        if (i == 0) expect = SkewPolynomial::constant(s, R.one());
        violations += !(acc == expect);
        // (7) N_m lands in the fixed subring whenever sigma^m = id
        for (std::uint64_t m = mu; m <= 16; m += mu) violations += !S.fixes(S.norm(beta, m));
      }
      // (3) multiplicativity over every pair
      for (ElemId gamma = 0; gamma < R.size(); ++gamma)
        for (std::uint64_t i = 0; i <= 8; ++i)
          violations += S.norm(R.mul(beta, gamma), i) != R.mul(S.norm(beta, i), S.norm(gamma, i));
    }
  }
  require(violations == 0, "norm identities hold (violations = " + std::to_string(violations) + ")",
          log);
}

// ---- criterion 5: centrality vs brute-force commutation -----------------

void criterion5(std::string& log) {
  std::mt19937_64 rng(0xACCE55);
  std::uint64_t disagreements = 0, sampled = 0;
  for (const SigmaPtr& s : {z8u_sigma(), gr42_frobenius(), f27_sigma()}) {
    const ChainRing& R = s->ring();
    SkewPolynomial x = SkewPolynomial::monomial(s, R.one(), 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t n = 2 + std::uint32_t(rng() % 5);
      std::uint32_t ell = 1 + std::uint32_t(rng() % (n - 1));
      std::vector<ElemId> c(n + 1, 0);
      c[n] = R.one();
      c[ell] = ElemId(rng() % R.size());
      c[0] = ElemId(rng() % R.size());
      SkewPolynomial f(s, c);

      bool commutes = f * x == x * f;
      for (ElemId r = 0; r < R.size() && commutes; ++r) {
        SkewPolynomial cr = SkewPolynomial::constant(s, r);
        commutes = f * cr == cr * f;
      }
      disagreements += is_central(f).central != commutes;
      ++sampled;
    }
  }
  require(disagreements == 0,
          "centrality matches commutation on " + std::to_string(sampled) + " trinomials", log);
}

// ---- criterion 6: condition consistency and the relation laws -----------

void criterion6(std::string& log) {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  const RingAutomorphism& S = *s;

  std::vector<Binomial> group;
  for (ElemId ae : S.fixed_units())
    for (ElemId a0 : S.fixed_units()) group.push_back({2, ae, a0});
  require(group.size() == 64, "binomial group has 64 members", log);

  struct Witnessed {
    Binomial a, b;
    ElemId alpha;
  };
  std::vector<Witnessed> positives;
  std::uint64_t mismatches = 0;
  for (const auto& a : group) {
    // ensure each member gives a central trinomial before deciding
    Trinomial tri{4, 2, a.a_ell, a.a0};
    if (!is_central(tri.to_poly(s)).central) {
      ++mismatches;
      continue;
    }
    for (const auto& b : group) {
      EquivalenceReport rep = equivalent(s, a, b, 4);
      mismatches += rep.c2 != rep.c4;
      if (rep.verdict) positives.push_back({a, b, *rep.witness_alpha});
    }
  }
  require(mismatches == 0, "condition (2) search equals condition (4) membership on all pairs",
          log);

  // reflexive
  std::uint64_t law_failures = 0;
  for (const auto& a : group) law_failures += !equivalent(s, a, a, 4).verdict;
  // symmetric: the inverse of a witness witnesses the reverse pair
  for (const auto& w : positives) {
    ElemId inv = R.inv(w.alpha);
    law_failures += R.mul(w.a.a0, S.norm(inv, 4)) != w.b.a0;
    law_failures += R.mul(w.a.a_ell, S.norm(S.apply_pow(inv, 2), 2)) != w.b.a_ell;
  }
  // transitive: witnesses compose multiplicatively
  for (const auto& w1 : positives)
    for (const auto& w2 : positives) {
      if (!(w1.b == w2.a)) continue;
      ElemId c = R.mul(w1.alpha, w2.alpha);
      law_failures += R.mul(w2.b.a0, S.norm(c, 4)) != w1.a.a0;
      law_failures += R.mul(w2.b.a_ell, S.norm(S.apply_pow(c, 2), 2)) != w1.a.a_ell;
    }
  require(law_failures == 0, "reflexivity, symmetry and transitivity on witnessed instances",
          log);
}

// ---- criterion 7: counting cross-validation on further instances --------

void criterion7(std::string& log) {
  struct Inst {
    SigmaPtr s;
    std::uint32_t n, ell;
    const char* name;
  };
  RingPresentation z9p;
  z9p.kind = RingKind::Eisenstein;
  z9p.p = 3;
  z9p.m = 2;
  z9p.r = 1;
  z9p.t = 2;
  z9p.s = 1;
  z9p.w = {1};
  RingPtr z9u = ChainRing::build(z9p);
  AutomorphismSpec neg_u;
  neg_u.u_image = std::vector<std::uint32_t>{0, 2};

  std::vector<Inst> instances = {
      {gr42_frobenius(), 4, 2, "GR(4,2) Frobenius n=4 ell=2"},
      {gr42_frobenius(), 6, 2, "GR(4,2) Frobenius n=6 ell=2"},
      {z8u_sigma(), 8, 4, "Z8[u] n=8 ell=4"},
      {f27_sigma(), 4, 2, "F27 sigma(u)=-u n=4 ell=2"},
      {RingAutomorphism::build(z9u, neg_u), 4, 2, "Z9[u] sigma(u)=-u n=4 ell=2"},
      {RingAutomorphism::identity(f27()), 3, 1, "F27 identity n=3 ell=1"},
  };
  for (const auto& inst : instances) {
    CountReport rep = h_size_report(*inst.s, inst.n, inst.ell);
    require(rep.consistent, std::string(inst.name) + " consistent", log);
  }

  // the stated oracle value for GR(4,2), n = 4, ell = 2
  CountReport g = h_size_report(*gr42_frobenius(), 4, 2);
  require(g.ker_T == 3, "GR(4,2) n=4 ell=2 Teichmüller kernel == 3", log);
  {
    // brute oracle over T* = {1, w, w^2}: both norms are xi^3 and xi^15
    const ChainRing& R = *gr42();
    const RingAutomorphism& S = *gr42_frobenius();
    std::uint64_t count = 0;
    for (ElemId xi : R.teichmuller_star())
      if (S.norm(xi, 2) == R.one() && S.norm(xi, 4) == R.one()) ++count;
    require(count == 3, "brute Teichmüller kernel over T* == 3", log);
  }
}

// ---- criterion 8: isometry verification on the worked pair --------------

void criterion8(std::string& log) {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  Trinomial f1{4, 2, R.from_integer(7), R.one()};
  Trinomial f2{4, 2, R.one(), R.one()};
  const ElemId alpha = R.from_coords({1, 1});

  IsometryOptions opts;  // defaults: 2^20 sweep, 2^16 closure
  IsometryReport rep = verify_isometry(s, alpha, f1, f2, opts);

  require(rep.mode == "full-quotient", "32^4 quotient swept in full under the default budget",
          log);
  require(rep.well_defined, "phi_alpha(f1) vanishes modulo f2", log);
  require(rep.bijective, "bijective", log);
  require(rep.weight_preserving, "weight preserving", log);
  require(rep.additive, "additive", log);
  require(rep.multiplicative, "multiplicative", log);
  require(rep.elements_swept == std::uint64_t(32) * 32 * 32 * 32, "swept exactly |R|^n elements",
          log);
  require(!rep.ideals.empty(), "singleton-generated ideals were compared", log);
  for (const auto& chk : rep.ideals) {
    require(!chk.skipped, "ideal for " + chk.generator + " within budget", log);
    require(chk.weights_match, "weight distributions agree for " + chk.generator, log);
    require(chk.image_is_ideal, "image is shift- and scalar-closed for " + chk.generator, log);
    require(chk.image_matches_generated,
            "image equals the ideal generated by the mapped generator for " + chk.generator, log);
  }
  require(rep.verdict, "overall isometry verdict", log);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "quaternary example: norms and equivalence witness", 1.0, criterion1},
      {2, "quaternary example: kernel sizes, invariant factors, image", 1.0, criterion2},
      {3, "counterexamples: support-set gap and image leaving the group", 1.0, criterion3},
      {4, "norm identities, exhaustive over the bundled rings", 30.0, criterion4},
      {5, "centrality vs brute-force commutation on random trinomials", 60.0, criterion5},
      {6, "equivalence-condition consistency and relation laws", 60.0, criterion6},
      {7, "counting cross-validation on further instances", 120.0, criterion7},
      {8, "isometry verification for the worked pair", 300.0, criterion8},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    std::string log;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.run(log);
    } catch (const std::exception& ex) {
      log += std::string("    exception: ") + ex.what() + "\n";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > crit.time_limit_s)
      log += "    exceeded the time limit (" + std::to_string(elapsed) + " s > " +
             std::to_string(crit.time_limit_s) + " s)\n";
    bool pass = log.empty();
    failures += !pass;
    std::printf("[%s] criterion %d: %s (%.3f s)\n", pass ? "PASS" : "FAIL", crit.id,
                crit.title.c_str(), elapsed);
    if (!pass) std::fputs(log.c_str(), stdout);
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
