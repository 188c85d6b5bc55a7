#include <gtest/gtest.h>

#include "lnd/catalog.hpp"
#include "lnd/errors.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace lnd;
using lnd::testing::P;

namespace {

RingPtr df5_ring() { return catalog::df5().ring; }

TEST(Poly, CancellationAndZero) {
  auto r = df5_ring();
  EXPECT_EQ((P(r, "x + s") + P(r, "x - s")), P(r, "2*x"));
  EXPECT_TRUE((P(r, "x^2*t - s") * Poly(r)).is_zero());
  EXPECT_TRUE(P(r, "0").is_zero());
}

TEST(Poly, FootnoteRelation) {
  auto ex = catalog::df5();
  using lnd::testing::gen;
  Poly rhs = -(gen(ex, "f1") * gen(ex, "f5")) + gen(ex, "f2") * gen(ex, "f4");
  EXPECT_EQ(rhs, gen(ex, "f3"));
}

TEST(Poly, CanonicalPrintingRoundTrips) {
  auto r = df5_ring();
  for (const char* s : {"2*x^3*t - s^2", "-1/2*s^2 + x^3*t", "x*v - s", "7", "0", "1/6*x^3"}) {
    Poly p = P(r, s);
    EXPECT_EQ(P(r, to_string(p)), p) << s;
  }
  EXPECT_EQ(to_string(P(r, "x*v - s")), "x*v - s");
}

TEST(Poly, ExactDivision) {
  auto r = df5_ring();
  EXPECT_EQ(*exact_div(P(r, "x^2*s - x*s^2"), P(r, "x")), P(r, "x*s - s^2"));
  EXPECT_FALSE(exact_div(P(r, "2*x^3*t - s^2"), P(r, "x")).has_value());
  Poly p = P(r, "3*x*t - u^2 + 1/2");
  EXPECT_EQ(*exact_div(p, p), P(r, "1"));
  EXPECT_THROW(exact_div(p, Poly(r)), DivisionByZero);
}

TEST(Poly, MaxPowerDividing) {
  auto r = df5_ring();
  EXPECT_EQ(max_power_dividing(P(r, "x^3*s^2"), P(r, "x")), 3u);
  EXPECT_EQ(max_power_dividing(P(r, "2*x^3*t - s^2"), P(r, "x")), 0u);
  auto r2 = catalog::f6().ring;
  EXPECT_EQ(max_power_dividing(P(r2, "(y*s)^6"), P(r2, "y*s")), 6u);
}

TEST(Poly, Substitute) {
  auto r7 = Ring::make({"x1", "x2", "x3", "y1", "y2", "y3", "v"});
  auto r5 = Ring::make({"x", "y", "z", "u", "w"});
  for (unsigned b = 1; b <= 3; ++b) {
    Poly ub = Poly::variable(r5, "u").pow(b);
    std::map<std::string, Poly> a{{"u", P(r7, "y1*y2*y3/6")}};
    Poly want = P(r7, "y1*y2*y3").pow(b) * (Rat(1) / power(Rat(6), b));
    EXPECT_EQ(substitute(ub, a, r7), want);
  }
  auto rob = catalog::roberts(2);
  Poly phi1 = lnd::testing::gen(rob, "phi1");
  std::map<std::string, Poly> ident;
  for (const auto& v : rob.ring->variables()) ident.emplace(v, Poly::variable(rob.ring, v));
  EXPECT_EQ(substitute(phi1, ident, rob.ring), phi1);
  std::vector<std::size_t> xs{0, 1, 2};
  EXPECT_TRUE(set_to_zero(phi1, xs).is_zero());
}

TEST(Poly, Evaluate) {
  auto r = df5_ring();
  std::vector<Rat> pt{1, 2, 0, 0, 3};
  EXPECT_EQ(evaluate(P(r, "x*v - s"), pt), Rat(1));
  std::vector<Rat> origin(5, Rat(0));
  EXPECT_EQ(evaluate(P(r, "x^2 - 7/3 + t*u"), origin), Rat(-7, 3));

  auto rob = catalog::roberts(2);
  std::vector<Rat> q{0, 0, 1, 0, 0, 0, 1};
  EXPECT_EQ(evaluate(lnd::testing::gen(rob, "phi4"), q), Rat(-1));
}

TEST(Poly, RingMismatchAndUnknownNames) {
  auto a = Ring::make({"x", "y"});
  auto b = Ring::make({"p", "q"});
  EXPECT_THROW(Poly::variable(a, "x") + Poly::variable(b, "p"), RingMismatch);
  EXPECT_THROW(parse_poly(a, "x + z"), ParseError);
  EXPECT_THROW(parse_poly(a, "x / y"), ParseError);
}

TEST(Poly, ArithOps) {
  auto r = df5_ring();
  Poly p = P(r, "x + s"), q = P(r, "3");
  EXPECT_EQ(arith(p, q, ArithOp::Pow), p * p * p);
  EXPECT_EQ(arith(p, q, ArithOp::Sub), P(r, "x + s - 3"));
  EXPECT_THROW(arith(p, p, ArithOp::Pow), std::invalid_argument);
}

TEST(Poly, MonomialOrdersDisagree) {
  auto lex = Ring::make({"x", "y"}, MonomialOrder::lex());
  auto grev = Ring::make({"x", "y"});
  EXPECT_EQ(to_string(P(lex, "y^3 + x")), "x + y^3");
  EXPECT_EQ(to_string(P(grev, "y^3 + x")), "y^3 + x");
}

TEST(RingProperties, Axioms) {
  auto s = lnd::testing::ring_axioms(101, 3000);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

TEST(RingProperties, ExactDivision) {
  auto s = lnd::testing::exact_division(102, 3000);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

TEST(RingProperties, SubstitutionIsAHomomorphism) {
  auto s = lnd::testing::substitution_homomorphism(103, 3000);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

}  // namespace
