#include <gtest/gtest.h>

#include "primdec/parser.hpp"
#include "primdec/theoremlab.hpp"
#include "support/random_ideals.hpp"

namespace primdec {
namespace {

class TheoremLabTest : public ::testing::Test {
 protected:
  RingPtr r = testing::ring_with(2);
  Ideal I(const std::string& gens) { return parse_ideal("ideal(" + gens + ")", r); }
  MonomialIdeal M(const std::string& gens) { return *MonomialIdeal::from_ideal(I(gens)); }
  const MonomialPrime X = MonomialPrime(r, {0});
  const MonomialPrime Y = MonomialPrime(r, {1});
  const MonomialPrime XY = MonomialPrime(r, {0, 1});
};

TEST_F(TheoremLabTest, CompatibilityExamples) {
  const auto i = M("x^2, x*y");
  const auto a = check_compatibility(i, {{X, M("x")}, {XY, M("x^2, x*y, y^3")}});
  EXPECT_TRUE(a.equal);
  EXPECT_TRUE(a.compatible());
  const auto b = check_compatibility(i, {{XY, M("x^2, x*y, y^2")}, {X, M("x")}});
  EXPECT_TRUE(b.compatible());
  EXPECT_EQ(b.intersection, i);

  const auto p = M("x");
  EXPECT_TRUE(check_compatibility(p, {{X, p}}).compatible());
}

TEST_F(TheoremLabTest, CompatibilityRejectsInvalidPicks) {
  const auto i = M("x^2, x*y");
  EXPECT_THROW(check_compatibility(i, {{X, M("x")}}), PreconditionError);
  EXPECT_THROW(check_compatibility(i, {{X, M("x")}, {XY, M("x, y")}}), PreconditionError);
  EXPECT_THROW(check_compatibility(i, {{X, M("x^2")}, {XY, M("x^2, y")}}), PreconditionError);
}

TEST_F(TheoremLabTest, OpennessExamples) {
  const auto ass = AssPoset::of(M("x^2, x*y"));
  EXPECT_TRUE(is_open_subset({X}, ass));
  EXPECT_FALSE(is_open_subset({XY}, ass));
  EXPECT_TRUE(is_open_subset(ass.primes, ass));
  EXPECT_THROW(is_open_subset({Y}, ass), PreconditionError);
}

TEST_F(TheoremLabTest, IndependenceExamples) {
  const auto i = M("x^2, x*y");
  const auto a = check_independence(i, {X}, 4);
  EXPECT_EQ(a.verdict, IndependenceVerdict::invariant);
  EXPECT_EQ(*a.invariant_intersection, M("x"));

  const auto b = check_independence(i, {XY}, 4);
  ASSERT_EQ(b.verdict, IndependenceVerdict::varies);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ(b.witness->intersection_a, M("x^2, x*y, y^2"));
  EXPECT_EQ(b.witness->intersection_b, M("x^2, x*y, y^3"));
  EXPECT_EQ(b.witness->powers_a, std::vector<std::uint32_t>{2});
  EXPECT_EQ(b.witness->powers_b, std::vector<std::uint32_t>{3});

  const auto c = check_independence(i, {X, XY}, 4);
  EXPECT_EQ(c.verdict, IndependenceVerdict::invariant);
  EXPECT_EQ(*c.invariant_intersection, i);
  EXPECT_EQ(c.intersections_checked, 16u);
}

TEST_F(TheoremLabTest, CanonicalQxExamples) {
  EXPECT_TRUE(ideal_equal(canonical_qx(M("x^2, x*y"), {X}), I("x")));
  EXPECT_TRUE(ideal_equal(canonical_qx(M("x^2, x*y"), {X, XY}), I("x^2, x*y")));
  EXPECT_TRUE(ideal_equal(canonical_qx(M("x^2*y, x*y^2"), {X, Y}), I("x*y")));
  EXPECT_THROW(canonical_qx(M("x^2, x*y"), {XY}), PreconditionError);
}

TEST_F(TheoremLabTest, ArtinReesExamples) {
  const auto a = ar_number(I("x"), I("x"));
  EXPECT_EQ(a.k, 1u);
  EXPECT_EQ(a.status, ARStatus::verified_on_window);
  EXPECT_EQ(a.window_start, 1u);
  EXPECT_EQ(a.window_end, 13u);

  const auto b = ar_number(I("x"), I("y"));
  EXPECT_EQ(b.k, 0u);

  // N ⊇ J^m bounds the number by m.
  const auto c = ar_number(I("x, y"), I("x^2, x*y, y^3"));
  EXPECT_LE(c.k, 3u);

  const auto mono = ar_number(M("x"), M("x"));
  EXPECT_EQ(mono.k, 1u);
}

TEST_F(TheoremLabTest, ArtinReesRejectsDegenerateInput) {
  EXPECT_THROW(ar_number(Ideal::unit(r), I("x")), PreconditionError);
  EXPECT_THROW(ar_number(I("x"), Ideal::zero(r)), PreconditionError);
  EXPECT_THROW(ar_number(I("x"), I("x"), 0), PreconditionError);
}

TEST_F(TheoremLabTest, IdentityExamples) {
  const std::vector<Ideal> one{I("x")};
  const std::vector<std::uint32_t> n1{1};
  EXPECT_TRUE(thm33_identity_check(one, std::span<const std::uint32_t>(n1), I("y"), 1));
  EXPECT_TRUE(thm33_identity_check(one, std::span<const std::uint32_t>(n1), I("y"), 10));

  const std::vector<MonomialIdeal> a{M("x^2, x*y")};
  const auto p = XY.ideal();
  EXPECT_FALSE(thm33_identity_check(a, std::span<const std::uint32_t>(n1), p, 1));
  EXPECT_TRUE(thm33_identity_check(a, std::span<const std::uint32_t>(n1), p, 2));
}

TEST_F(TheoremLabTest, MinPowerExamples) {
  const auto i = M("x^2, x*y");
  EXPECT_EQ(min_power_for_primary(i, XY), 2u);
  for (std::uint32_t n = 1; n <= 5; ++n) EXPECT_EQ(min_power_for_primary(mono_power(i, n), XY), 2 * n);
  // A prime that is both minimal and maximal in Ass: the least m with P^m
  // inside its unique primary component.
  const auto r3 = testing::ring_with(3);
  const auto j = *MonomialIdeal::from_ideal(parse_ideal("ideal(x^3*y^2, x^3*z)", r3));
  const auto dec = primary_decomposition(j);
  ASSERT_EQ(dec.components.size(), 2u);
  for (const auto& c : dec.components) {
    std::uint32_t m = 1;
    while (!c.component.contains(mono_power(c.prime.ideal(), m))) ++m;
    EXPECT_EQ(min_power_for_primary(j, c.prime), m) << c.prime.to_string();
  }
  EXPECT_EQ(min_power_for_primary(j, MonomialPrime(r3, {0})), 3u);
  EXPECT_EQ(min_power_for_primary(j, MonomialPrime(r3, {1, 2})), 2u);
  EXPECT_THROW(min_power_for_primary(i, Y), PreconditionError);
}

TEST_F(TheoremLabTest, GrowthClosedForm) {
  const auto report = linear_growth_experiment({M("x^2, x*y")}, 6);
  EXPECT_EQ(report.k_empirical, 2u);
  EXPECT_TRUE(report.all_verified);
  ASSERT_EQ(report.points.size(), 6u);
  for (const auto& point : report.points) {
    const auto n = point.exponents[0];
    ASSERT_EQ(point.primes.size(), 2u);
    EXPECT_EQ(point.primes[0].prime, X);
    EXPECT_EQ(point.primes[0].family_min_power, n);
    EXPECT_EQ(point.primes[1].prime, XY);
    EXPECT_EQ(point.primes[1].min_power, 2 * n);
  }
}

TEST_F(TheoremLabTest, GrowthPrincipalPrime) {
  const auto report = linear_growth_experiment({M("x")}, 5);
  EXPECT_EQ(report.k_empirical, 1u);
  for (const auto& point : report.points) {
    ASSERT_EQ(point.primes.size(), 1u);
    EXPECT_EQ(point.primes[0].family_min_power, point.exponents[0]);
  }
}

TEST_F(TheoremLabTest, GrowthTwoIdeals) {
  const auto report = linear_growth_experiment({M("x"), M("y")}, 3);
  EXPECT_EQ(report.k_empirical, 1u);
  EXPECT_TRUE(report.all_verified);
  EXPECT_EQ(report.points.size(), 15u);
}

TEST(GrowthGrid, LexicographicWithoutZero) {
  const auto g = growth_grid(2, 1);
  EXPECT_EQ(g, (std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}, {1, 1}}));
}

}  // namespace
}  // namespace primdec
