#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "skewpc/equivalence.hpp"
#include "test_support.hpp"

using namespace skewpc;
using namespace skewpc::testing;

namespace {

std::vector<Binomial> full_group(const RingAutomorphism& s, std::uint32_t ell) {
  std::vector<Binomial> out;
  for (ElemId ae : s.fixed_units())
    for (ElemId a0 : s.fixed_units()) out.push_back({ell, ae, a0});
  return out;
}

}  // namespace

TEST_CASE("schur product group laws") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  const Binomial identity{2, R.one(), R.one()};
  auto group = full_group(*s, 2);
  REQUIRE(group.size() == 64);

  // identity, inverses, closure; exhaustive at this size
  for (const auto& a : group) {
    CHECK(schur_product(R, a, identity) == a);
    Binomial inv = schur_inverse(R, a);
    CHECK(in_schur_group(*s, inv));
    CHECK(schur_product(R, a, inv) == identity);
    for (const auto& b : group) {
      Binomial ab = schur_product(R, a, b);
      CHECK(in_schur_group(*s, ab));
      CHECK(ab == schur_product(R, b, a));
    }
  }

  // (7x^2 + 1) * (7x^2 + 1) = x^2 + 1 since 7 * 7 = 49 = 1 mod 8
  Binomial seven{2, R.from_integer(7), R.one()};
  CHECK(schur_product(R, seven, seven) == identity);

  CHECK_THROWS_AS(schur_product(R, Binomial{1, R.one(), R.one()}, identity), Error);
}

TEST_CASE("membership in the binomial group") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  CHECK(in_schur_group(*s, {2, R.one(), R.one()}));
  CHECK(in_schur_group(*s, {2, R.from_integer(7), R.one()}));
  CHECK_FALSE(in_schur_group(*s, {2, R.gamma(), R.one()}));          // non-unit
  CHECK_FALSE(in_schur_group(*s, {2, R.from_coords({1, 1}), R.one()}));  // not fixed

  const SigmaPtr& g = gr42_frobenius();
  const ElemId w = g->ring().from_coords({0, 1});
  CHECK_FALSE(in_schur_group(*g, {2, w, g->ring().one()}));  // sigma(w) = w^2 != w
}

TEST_CASE("theta values") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();

  // theta(1) is the identity binomial
  CHECK(theta(*s, R.one(), 4, 2) == Binomial{2, R.one(), R.one()});

  // theta(1+u) = 7x^2 + 1 from N_2 = 7, N_4 = 1
  CHECK(theta(*s, R.from_coords({1, 1}), 4, 2) == Binomial{2, R.from_integer(7), R.one()});

  // theta(w) with n = 3, ell = 2 over GR(4,2) has both coefficients w
  const SigmaPtr& g = gr42_frobenius();
  const ElemId w = g->ring().from_coords({0, 1});
  Binomial th = theta(*g, w, 3, 2);
  CHECK(th.a_ell == w);
  CHECK(th.a0 == w);
  CHECK_FALSE(in_schur_group(*g, th));

  CHECK_THROWS_AS(theta(*s, R.gamma(), 4, 2), Error);
}

TEST_CASE("theta image") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  auto H = theta_image(*s, 4, 2);
  REQUIRE(H.size() == 2);
  CHECK(H[0] == Binomial{2, R.one(), R.one()});
  CHECK(H[1] == Binomial{2, R.from_integer(7), R.one()});

  // under the divisibility hypotheses theta is a homomorphism
  for (ElemId a : R.units())
    for (ElemId b : R.units())
      CHECK(theta(*s, R.mul(a, b), 4, 2) ==
            schur_product(R, theta(*s, a, 4, 2), theta(*s, b, 4, 2)));

  // the image leaves the binomial group when n is odd (order 2 sigma)
  const SigmaPtr& g = gr42_frobenius();
  auto Hg = theta_image(*g, 3, 2);
  CHECK(std::any_of(Hg.begin(), Hg.end(),
                    [&](const Binomial& h) { return !in_schur_group(*g, h); }));

  // identity sigma with both norm exponents annihilating the unit group
  // (its exponent is lcm(2, 3) = 6): the image collapses to the identity
  auto ident = RingAutomorphism::identity(f27());
  auto Hid = theta_image(*ident, 12, 6);
  CHECK(Hid.size() == 1);
  CHECK(Hid[0] == Binomial{6, f27()->one(), f27()->one()});
}

TEST_CASE("equivalence decisions over the quaternary ring") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  const Binomial one{2, R.one(), R.one()};
  const Binomial seven{2, R.from_integer(7), R.one()};
  const Binomial three{2, R.from_integer(3), R.one()};

  SUBCASE("reflexivity with witness 1") {
    auto rep = equivalent(s, one, one, 4);
    CHECK(rep.verdict);
    CHECK(rep.witness_alpha.has_value());
  }
  SUBCASE("7x^2+1 is equivalent to x^2+1 with a condition-checked witness") {
    auto rep = equivalent(s, seven, one, 4);
    CHECK(rep.verdict);
    CHECK(rep.c2);
    CHECK(rep.c4);
    REQUIRE(rep.witness_alpha.has_value());
    ElemId a = *rep.witness_alpha;
    CHECK(R.mul(one.a0, s->norm(a, 4)) == seven.a0);
    CHECK(R.mul(one.a_ell, s->norm(s->apply_pow(a, 2), 2)) == seven.a_ell);
  }
  SUBCASE("3x^2+1 is not equivalent to x^2+1") {
    auto rep = equivalent(s, three, one, 4);
    CHECK_FALSE(rep.verdict);
    CHECK_FALSE(rep.c2);
    CHECK_FALSE(rep.c4);
    CHECK_FALSE(rep.witness_alpha.has_value());
  }
  SUBCASE("binomials outside the group are refused") {
    // 2 is sigma-fixed but not a unit: the trinomial is central, yet the
    // binomial lies outside the group the theorem speaks about
    Binomial outside{2, R.from_integer(2), R.one()};
    try {
      equivalent(s, outside, one, 4);
      FAIL("expected OutOfHypothesis");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::OutOfHypothesis);
    }
    // a non-fixed coefficient already breaks centrality
    Binomial unfixed{2, R.from_coords({1, 1}), R.one()};
    try {
      equivalent(s, unfixed, one, 4);
      FAIL("expected NotCentral");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotCentral);
    }
  }
  SUBCASE("non-central trinomials are refused") {
    const SigmaPtr& g = gr42_frobenius();
    const ChainRing& G = g->ring();
    Binomial b3{2, G.from_integer(3), G.from_integer(3)};
    try {
      equivalent(g, b3, b3, 3);  // n = 3 breaks sigma^n = id
      FAIL("expected NotCentral");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotCentral);
    }
  }
  SUBCASE("degree mismatch") {
    CHECK_THROWS_AS(equivalent(s, Binomial{1, R.one(), R.one()}, one, 4), Error);
  }
}

TEST_CASE("condition consistency and the relation laws over the full group") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  auto group = full_group(*s, 2);

  struct Witnessed {
    Binomial a, b;
    ElemId alpha;
  };
  std::vector<Witnessed> positives;

  for (const auto& a : group)
    for (const auto& b : group) {
      auto rep = equivalent(s, a, b, 4);
      CHECK(rep.c2 == rep.c4);
      if (rep.verdict) positives.push_back({a, b, *rep.witness_alpha});
    }

  // reflexive: every member is equivalent to itself
  for (const auto& a : group) CHECK(equivalent(s, a, a, 4).verdict);

  // symmetric: the inverse witness satisfies the coefficient conditions
  for (const auto& wt : positives) {
    ElemId inv = R.inv(wt.alpha);
    CHECK(R.mul(wt.a.a0, s->norm(inv, 4)) == wt.b.a0);
    CHECK(R.mul(wt.a.a_ell, s->norm(s->apply_pow(inv, 2), 2)) == wt.b.a_ell);
  }

  // transitive: witnesses compose multiplicatively
  for (const auto& w1 : positives)
    for (const auto& w2 : positives) {
      if (!(w1.b == w2.a)) continue;
      ElemId composed = R.mul(w1.alpha, w2.alpha);
      CHECK(R.mul(w2.b.a0, s->norm(composed, 4)) == w1.a.a0);
      CHECK(R.mul(w2.b.a_ell, s->norm(s->apply_pow(composed, 2), 2)) == w1.a.a_ell);
    }
}

TEST_CASE("coset partition of the binomial group") {
  const SigmaPtr& s = z8u_sigma();
  const ChainRing& R = s->ring();
  auto classes = equivalence_classes(s, 4, 2);

  CHECK(classes.subgroup.size() == 2);
  CHECK(classes.classes.size() == 32);  // |B| / |H| = 64 / 2
  for (const auto& cls : classes.classes) CHECK(cls.size() == classes.subgroup.size());

  // the class containing the identity binomial is exactly the subgroup
  const Binomial identity{2, R.one(), R.one()};
  bool found = false;
  for (const auto& cls : classes.classes)
    if (std::find(cls.begin(), cls.end(), identity) != cls.end()) {
      CHECK(cls == classes.subgroup);
      found = true;
    }
  CHECK(found);

  // classes agree with the pairwise decision procedure
  for (const auto& cls : classes.classes)
    for (const auto& a : cls)
      for (const auto& b : cls) CHECK(equivalent(s, a, b, 4).verdict);

  SUBCASE("hypotheses are enforced") {
    try {
      equivalence_classes(gr42_frobenius(), 3, 2);
      FAIL("expected HypothesisViolated");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::HypothesisViolated);
    }
  }
  SUBCASE("budget is enforced") {
    CHECK_THROWS_AS(equivalence_classes(s, 4, 2, 10), Error);
  }
}
