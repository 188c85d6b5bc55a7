#include <gtest/gtest.h>

#include "lnd/catalog.hpp"
#include "lnd/maubach.hpp"
#include "support/fixtures.hpp"

using namespace lnd;
using lnd::testing::P;

namespace {

TEST(Alpha, ExactSums) {
  EXPECT_EQ(alpha(1).summation, Rat(1, 3));
  EXPECT_EQ(alpha(2).summation, Rat(-2, 15));
  // the closed form is off by a factor b+1
  for (unsigned b = 1; b <= 6; ++b) {
    auto a = alpha(b);
    EXPECT_FALSE(a.agree);
    EXPECT_EQ(a.ratio, Rat(b + 1)) << b;
  }
  EXPECT_EQ(alpha(1).closed_form, Rat(2, 3));
  EXPECT_EQ(alpha(2).closed_form, Rat(-2, 5));
}

TEST(MaubachGenerators, ConstructionSucceeds) {
  for (unsigned b = 1; b <= 3; ++b) {
    MaubachResult m = maubach_generators(b);
    EXPECT_TRUE(m.ok) << m.diagnostics;
    const auto& c = m.checks;
    EXPECT_TRUE(c.h_in_kernel && c.hprime_in_kernel && c.hdoubleprime_in_kernel);
    EXPECT_TRUE(c.exactly_one_reading);
    ASSERT_TRUE(m.reading.has_value());
    EXPECT_EQ(*m.reading, CoefficientReading::Transposed);
    EXPECT_EQ(m.n, b + 1);
    EXPECT_LE(m.n, 2 * b);
    EXPECT_TRUE(c.residue_identity);
    EXPECT_TRUE(c.matches_printed_generators);
    EXPECT_TRUE(c.theta_matches_printed);
    EXPECT_EQ(m.y, P(m.delta.ring(), "y"));
  }
}

TEST(MaubachGenerators, AsPrintedReadingLeavesResidue) {
  MaubachResult m = maubach_generators(1);
  for (const auto& a : m.attempts)
    if (a.reading == CoefficientReading::AsPrinted) {
      EXPECT_FALSE(a.residue.is_zero());
      EXPECT_FALSE(a.succeeded);
    }
}

TEST(Lemma52, ConstantsVanishModYZ) {
  for (unsigned b = 1; b <= 3; ++b) {
    Lemma52Report rep = verify_lemma52(b);
    EXPECT_TRUE(rep.ok);
    ASSERT_EQ(rep.in_yz.size(), 4u);
    for (const auto& c : rep.in_yz) {
      ASSERT_TRUE(c.constant.has_value()) << c.name;
      EXPECT_EQ(*c.constant, Rat(0)) << c.name;
    }
    EXPECT_TRUE(rep.mod_z_in_y);
  }
}

TEST(Lemma51, InducedDerivationAndDecomposition) {
  for (auto [a, b] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}, {2u, 2u}}) {
    Lemma51Report rep = verify_lemma51(a, b);
    EXPECT_TRUE(rep.ok) << a << "," << b;
    EXPECT_TRUE(rep.induced_matches);
    EXPECT_EQ(rep.kernel_vars, (std::vector<std::string>{"y1", "y2", "y3"}));
    for (const auto& d : rep.decomposition) EXPECT_TRUE(d.component.has_value()) << d.name;
  }
}

}  // namespace
