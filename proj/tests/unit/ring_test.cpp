#include <gtest/gtest.h>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/ring.hpp"
#include "generators.hpp"

namespace degenkit {
namespace {

const Catalog& cat() { return Catalog::builtin(); }

VarElement v(std::string_view text) { return VarElement::parse(text); }

TEST(Ring, PolynomialProducts) {
  EXPECT_EQ(v("1 + L") * v("1 + L"), v("1 + 2*L + L^2"));
  EXPECT_EQ(v("[E]") * v("1 + L"), v("[E] + L*[E]"));
  const VarElement ee = v("[E]") * v("[E]");
  ASSERT_EQ(ee.size(), 1u);
  EXPECT_EQ(ee.coefficient(ClassMonomial::of("E") * ClassMonomial::of("E"), 0), 1);
  EXPECT_EQ(ee.to_string(), "[E]*[E]");
}

TEST(Ring, CanonicalText) {
  EXPECT_EQ(VarElement().to_string(), "0");
  EXPECT_EQ(v("L^2 + 1 + L").to_string(), "1 + L + L^2");
  EXPECT_EQ(v("L*[E] - 2*[E] + 1").to_string(), "1 - 2*[E] + L*[E]");
  EXPECT_EQ(v("-3*L^2*[E]*[C2]").to_string(), "-3*L^2*[C2]*[E]");
  EXPECT_EQ(v("[pt]").to_string(), "1");
  EXPECT_EQ(v("(1 + L)^3").to_string(), "1 + 3*L + 3*L^2 + L^3");
  EXPECT_EQ(v("2*L^0 + 1*L^1").to_string(), "2 + L");
}

TEST(Ring, ParseRejectsMalformedText) {
  for (const char* bad : {"", "+", "1 +", "L^", "[", "[E", "[]", "[1x]", "2**L", "(1 + L", "L^-1", "1 2", "x"}) {
    try {
      (void)VarElement::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Parse) << bad;
    }
  }
}

TEST(Ring, MuExamples) {
  EXPECT_EQ(mu(v("1 + L + L^2"), cat()), SgtElement::point(3));
  EXPECT_EQ(mu(v("[E] + L*[E]"), cat()), SgtElement::parse("2*[E]"));
  EXPECT_TRUE(mu(v("L*[E] - [E]"), cat()).is_zero());
  EXPECT_EQ(mu(v("[P2]"), cat()), SgtElement::point(3));
  EXPECT_EQ(mu(v("[RuledE]"), cat()), SgtElement::parse("2*[E]"));
  EXPECT_EQ(mu(v("[K3_X]*[E]"), cat()).to_string(), "[E]*[K3_X]");
  EXPECT_THROW((void)mu(v("[Nope]"), cat()), Error);
}

TEST(Ring, EulerExamples) {
  EXPECT_EQ(euler(v("1 + L + L^2"), cat()), 3);
  EXPECT_EQ(euler(v("[E]"), cat()), 0);
  // Betti numbers of a K3 surface: 1, 0, 22, 0, 1.
  const int k3_betti_sum = 1 + 0 + 22 + 0 + 1;
  EXPECT_EQ(euler(v("[K3_X]*L"), cat()), k3_betti_sum);
  EXPECT_EQ(cat().at("K3_X").euler, k3_betti_sum);
}

TEST(Ring, ReduceModLMinusOne) {
  EXPECT_TRUE(reduce_mod_L_minus_1(v("3*L - 3")).is_zero());
  EXPECT_EQ(reduce_mod_L_minus_1(v("L*[E] + [E]")), v("2*[E]"));
  EXPECT_TRUE(reduce_mod_L_minus_1(v("3*(L + 1) - 6")).is_zero());
}

TEST(Ring, SgtTextUsesPointBasis) {
  EXPECT_EQ((SgtElement::point(24) - SgtElement::parse("2*[E]")).to_string(), "24*[pt] - 2*[E]");
  EXPECT_EQ(SgtElement().to_string(), "0");
  EXPECT_EQ(SgtElement::parse("24*[pt] - 2*[E]"), SgtElement::point(24) - SgtElement::parse("2*[E]"));
  EXPECT_THROW((void)SgtElement::parse("L*[E]"), Error);
}

class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, CommutativeRingAxioms) {
  testing::Rng rng(static_cast<std::uint64_t>(GetParam()));
  const std::vector<std::string> labels{"E", "C2", "K3_X", "P2"};
  for (int round = 0; round < 40; ++round) {
    const auto a = testing::random_var_element(rng, labels);
    const auto b = testing::random_var_element(rng, labels);
    const auto c = testing::random_var_element(rng, labels);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(VarElement::parse(a.to_string()), a);
    EXPECT_EQ(euler(a * b, cat()), euler(a, cat()) * euler(b, cat()));
    EXPECT_EQ(euler(a + b, cat()), euler(a, cat()) + euler(b, cat()));
    EXPECT_EQ(euler(VarElement::lefschetz(3) * a, cat()), euler(a, cat()));
    EXPECT_EQ(mu(VarElement::lefschetz() * a, cat()), mu(a, cat()));
    const auto r = reduce_mod_L_minus_1(a);
    EXPECT_EQ(reduce_mod_L_minus_1(r), r);
    EXPECT_EQ(reduce_mod_L_minus_1(a + b), r + reduce_mod_L_minus_1(b));
    EXPECT_EQ(mu(a, cat()), mu(r, cat()));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingProperties, ::testing::Values(1, 2, 3, 4, 5));

}  // namespace
}  // namespace degenkit
