#include <gtest/gtest.h>

#include "lnd/catalog.hpp"
#include "lnd/symmetry.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace lnd;
using lnd::testing::P;

namespace {

TEST(Weights, Section5Torus) {
  for (unsigned a = 1; a <= 2; ++a) {
    auto ex = catalog::new7(a, 1);
    auto w = catalog::new7_torus(ex.ring, a, 1);
    const long A = a;
    EXPECT_EQ(*weight(P(ex.ring, "x1^" + std::to_string(a) + "*y2*y3"), w), (WeightVector{A, A, A}));
    EXPECT_EQ(*weight(P(ex.ring, "x1*x2*x3"), w), (WeightVector{1, 1, 1}));
  }
  auto ex = catalog::new7(2, 1);
  EXPECT_FALSE(weight(P(ex.ring, "x1 + y1"), catalog::new7_torus(ex.ring, 2, 1)).has_value());
  EXPECT_FALSE(weight(Poly(ex.ring), catalog::new7_torus(ex.ring, 2, 1)).has_value());
}

TEST(Weights, HomogeneousComponentModuloDiagonal) {
  auto ex = catalog::new7(1, 1);
  auto h = catalog::new7_subtorus(ex.ring, 1, 1);
  Poly p = P(ex.ring, "x1*y2*y3 + x1^2*y1");
  EXPECT_EQ(homogeneous_component(p, h, {0, 0, 0}), P(ex.ring, "x1*y2*y3"));
  EXPECT_EQ(homogeneous_component(p, h, {1, 1, 1}), P(ex.ring, "x1*y2*y3"));
  EXPECT_EQ(homogeneous_component(p, h, {3, 0, 0}), P(ex.ring, "x1^2*y1"));
  Poly sum(ex.ring);
  for (const auto& d : occurring_weights(p, h)) sum += homogeneous_component(p, h, d);
  EXPECT_EQ(sum, p);
}

TEST(Permutations, Convention) {
  auto ex = catalog::roberts(2);
  PermAction act(ex.ring, {{"x1", "x2", "x3"}, {"y1", "y2", "y3"}});
  Poly phi1 = lnd::testing::gen(ex, "phi1");
  EXPECT_EQ(perm_image(phi1, {1, 0, 2}, act), -phi1);
  EXPECT_EQ(perm_image(phi1, {0, 1, 2}, act), phi1);
  // x_i -> x_sigma(i)
  EXPECT_EQ(perm_image(P(ex.ring, "x1"), {1, 2, 0}, act), P(ex.ring, "x2"));
  EXPECT_EQ(perm_image(P(ex.ring, "v"), {1, 2, 0}, act), P(ex.ring, "v"));
  EXPECT_EQ(all_permutations(3).size(), 6u);
  EXPECT_EQ(all_permutations(3).front(), (Permutation{0, 1, 2}));
}

TEST(OrbitProduct, Examples) {
  auto ex = catalog::new7(1, 1);
  auto act = catalog::new7_s3(ex.ring);
  EXPECT_EQ(orbit_product(P(ex.ring, "y1"), act), P(ex.ring, "y1^2*y2^2*y3^2"));
  Poly inv = P(ex.ring, "x1*x2*x3 + v");
  EXPECT_EQ(orbit_product(inv, act), inv.pow(6));
}

TEST(Invariance, Section5) {
  for (unsigned a = 1; a <= 2; ++a) {
    auto ex = catalog::new7(a, 1);
    auto h = catalog::new7_subtorus(ex.ring, a, 1);
    auto gens = catalog::new7_h_invariants(ex.ring, a);
    EXPECT_EQ(gens.size(), 9u);
    for (const auto& g : gens) EXPECT_TRUE(invariance_check(g.poly, h)) << g.name;
    EXPECT_FALSE(invariance_check(P(ex.ring, "x1*y2"), h));

    auto s3 = catalog::new7_s3(ex.ring);
    const std::string e = std::to_string(a);
    EXPECT_TRUE(invariance_check(
        P(ex.ring, "x1^" + e + "*y2*y3 + x2^" + e + "*y1*y3 + x3^" + e + "*y1*y2"), s3));
    EXPECT_FALSE(invariance_check(P(ex.ring, "x1"), s3));
  }
}

TEST(Pullback, Dictionary) {
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b) {
      auto ex = catalog::new7(a, b);
      auto dict = catalog::new7_dictionary(ex.ring, a, b);
      auto res = pullback_check(ex.d, dict, catalog::maubach(a, b));
      EXPECT_TRUE(res.ok) << "a=" << a << " b=" << b;
      EXPECT_EQ(res.entries.size(), 5u);

      dict.at("y") *= Rat(3);
      EXPECT_FALSE(pullback_check(ex.d, dict, catalog::maubach(a, b)).ok);
    }
}

TEST(SymmetryProperties, WeightAdditivity) {
  auto s = lnd::testing::weight_additivity(501, 3000);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

TEST(SymmetryProperties, OrbitProductInvariant) {
  auto s = lnd::testing::orbit_product_invariant(502, 400);
  EXPECT_TRUE(s.ok()) << lnd::testing::summary(s);
}

}  // namespace
