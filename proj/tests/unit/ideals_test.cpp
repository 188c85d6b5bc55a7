#include <gtest/gtest.h>

#include "lnd/catalog.hpp"
#include "lnd/errors.hpp"
#include "lnd/ideals.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace lnd;
using lnd::testing::gen;
using lnd::testing::P;

namespace {

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Groebner, MonomialGenerators) {
  auto r = catalog::df5().ring;
  auto gb = groebner(Ideal(r, {P(r, "s"), P(r, "x")}));
  EXPECT_EQ(strings(gb.basis), (std::vector<std::string>{"s", "x"}));
}

TEST(Groebner, ReducesSecondGeneratorModuloFirst) {
  auto r = catalog::f6().ring;
  auto gb = groebner(Ideal(r, {P(r, "x"), P(r, "2*x^3*y^3*t - y^6*s^2")}));
  EXPECT_EQ(strings(gb.basis), (std::vector<std::string>{"x", "y^6*s^2"}));
}

TEST(Groebner, PrincipalIsMonic) {
  auto r = catalog::df5().ring;
  auto gb = groebner(Ideal(r, {P(r, "2*x^3*t - s^2")}));
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], P(r, "x^3*t - 1/2*s^2"));
}

TEST(Groebner, UnitIdeal) {
  auto r = Ring::make({"x", "y"});
  auto gb = groebner(Ideal(r, {P(r, "x*y - 1"), P(r, "x")}));
  EXPECT_TRUE(gb.is_unit());
  EXPECT_THROW(height(Ideal(r, {P(r, "x*y - 1"), P(r, "x")})), UnitIdeal);
}

TEST(Groebner, StepCeilingIsReported) {
  auto r = Ring::make({"x", "y", "z"}, MonomialOrder::lex());
  std::vector<Poly> g{P(r, "x^3 - y*z + 1"), P(r, "y^3 - x*z^2"), P(r, "z^3 - x^2*y + 2")};
  EXPECT_THROW(groebner(r, g, 3), ResourceLimitExceeded);
}

TEST(NormalForm, Examples) {
  auto rob = catalog::roberts(2);
  auto r = rob.ring;
  auto gb = groebner(Ideal(r, {P(r, "x1"), P(r, "x2"), P(r, "x3")}));
  EXPECT_TRUE(normal_form(gen(rob, "phi1"), gb).is_zero());
  auto d = catalog::df5().ring;
  EXPECT_EQ(normal_form(P(d, "1 + x"), groebner(Ideal(d, {P(d, "x"), P(d, "s")}))), P(d, "1"));
}

TEST(IdealMember, Examples) {
  auto ex = catalog::df5();
  auto r = ex.ring;
  Ideal xs(r, {P(r, "x"), P(r, "s")});
  EXPECT_TRUE(ideal_member(gen(ex, "f6"), xs));
  EXPECT_TRUE(ideal_member(gen(ex, "f2"), xs));
  EXPECT_FALSE(ideal_member(P(r, "1"), xs));
}

TEST(RadicalMember, Examples) {
  auto r = catalog::f6().ring;
  Ideal i(r, {P(r, "x"), P(r, "2*x^3*y^3*t - y^6*s^2")});
  EXPECT_TRUE(radical_member(P(r, "y*s"), i));
  EXPECT_FALSE(ideal_member(P(r, "y*s"), i));
  auto d = catalog::df5().ring;
  EXPECT_FALSE(radical_member(P(d, "t"), Ideal(d, {P(d, "x"), P(d, "s")})));
  Poly p = P(d, "x*t - u^2");
  EXPECT_TRUE(radical_member(p, Ideal(d, {p * p})));
}

TEST(Saturation, Examples) {
  auto d = catalog::df5().ring;
  Ideal s = saturation(Ideal(d, {P(d, "x*s")}), P(d, "x"));
  EXPECT_EQ(strings(s.generators()), (std::vector<std::string>{"s"}));

  auto r = catalog::f6().ring;
  Ideal t = saturation(Ideal(r, {P(r, "x"), P(r, "y^6*s^2")}), P(r, "y"));
  EXPECT_EQ(strings(t.generators()), (std::vector<std::string>{"s^2", "x"}));
}

TEST(Height, Examples) {
  auto d = catalog::df5().ring;
  EXPECT_EQ(height(Ideal(d, {P(d, "x"), P(d, "s")})), 2u);
  EXPECT_EQ(height(Ideal(d, {P(d, "x")})), 1u);
  EXPECT_EQ(height(Ideal(d, {P(d, "x"), P(d, "2*x^3*t - s^2")})), 2u);
  EXPECT_EQ(dimension(Ideal(d, {P(d, "x"), P(d, "s")})), 3u);
  auto r = catalog::roberts(2).ring;
  EXPECT_EQ(height(Ideal(r, {P(r, "x1"), P(r, "x2"), P(r, "x3")})), 3u);
}

TEST(RadicalEqual, Examples) {
  auto r = catalog::f6().ring;
  EXPECT_TRUE(radical_equal(Ideal(r, {P(r, "x"), P(r, "2*x^3*y^3*t - y^6*s^2")}),
                            Ideal(r, {P(r, "x"), P(r, "y*s")})));
  EXPECT_TRUE(radical_equal(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "x^2")})));
  EXPECT_FALSE(radical_equal(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "s")})));
}

TEST(ConstPlusIdeal, Examples) {
  auto ex = catalog::df5();
  auto r = ex.ring;
  Ideal xs(r, {P(r, "x"), P(r, "s")});
  EXPECT_EQ(const_plus_ideal_member(gen(ex, "f6"), xs), Rat(0));
  EXPECT_EQ(const_plus_ideal_member(P(r, "5 + x*t"), xs), Rat(5));
  EXPECT_FALSE(const_plus_ideal_member(P(r, "t"), xs).has_value());
}

TEST(IdealProperties, GroebnerUniqueUnderPermutation) {
  auto s = lnd::testing::groebner_permutation(201, 2000);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

TEST(IdealProperties, NormalFormIdempotent) {
  auto s = lnd::testing::normal_form_idempotent(202, 2000);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

TEST(IdealProperties, MonomialHeight) {
  auto s = lnd::testing::monomial_height(203, 1400);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

TEST(IdealProperties, SaturationContainsQuotients) {
  auto s = lnd::testing::saturation_contains(204, 300);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

}  // namespace
