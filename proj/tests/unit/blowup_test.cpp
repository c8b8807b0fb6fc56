#include <gtest/gtest.h>

#include "degenkit/blowup.hpp"
#include "degenkit/error.hpp"
#include "degenkit/model_io.hpp"
#include "generators.hpp"

namespace degenkit {
namespace {

const Catalog& cat() { return Catalog::builtin(); }
VarElement v(std::string_view text) { return VarElement::parse(text); }

SncModel cycle(int n) {
  std::vector<Component> c;
  std::map<Face, VarElement> s;
  for (int i = 1; i <= n; ++i) {
    c.push_back({ComponentId(std::to_string(i)), 1, v("1 + L")});
    s.emplace(make_face({ComponentId(std::to_string(i)), ComponentId(std::to_string(i % n + 1))}), 1);
  }
  return SncModel(1, c, s);
}

Errc move_error(const SncModel& m, const char* center, const char* id) {
  try {
    (void)blow_up_stratum(m, BlowupMove{parse_face(center), ComponentId(id)});
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Io;
}

TEST(Blowup, NodeOfTwoLines) {
  const SncModel m(1, {{ComponentId("1"), 1, v("[P1]")}, {ComponentId("2"), 3, v("[P1]")}}, {{make_face({"1", "2"}), 1}});
  const SncModel b = blow_up_stratum(m, BlowupMove{make_face({"1", "2"}), ComponentId("E1")});
  const SncModel expected(1,
                          {{ComponentId("1"), 1, v("[P1]")}, {ComponentId("2"), 3, v("[P1]")}, {ComponentId("E1"), 4, v("1 + L")}},
                          {{make_face({"1", "E1"}), 1}, {make_face({"2", "E1"}), 1}});
  EXPECT_EQ(b, expected) << write_model(b);
  EXPECT_EQ(b.stratum(make_face({"1", "2"})), nullptr);
  EXPECT_EQ(rho_var(b), rho_var(m));
  EXPECT_TRUE(validate(b, cat()).empty());
}

// Blowing up a node of a cycle of three lines gives a cycle of four lines
// with the exceptional line between the two separated components.
TEST(Blowup, ThreeGonBecomesFourGon) {
  const SncModel b = blow_up_stratum(cycle(3), BlowupMove{make_face({"1", "2"}), ComponentId("4")});
  std::vector<Component> c;
  for (const char* id : {"1", "2", "3"}) c.push_back({ComponentId(id), 1, v("1 + L")});
  c.push_back({ComponentId("4"), 2, v("1 + L")});
  const SncModel four(1, c, {{make_face({"1", "3"}), 1}, {make_face({"2", "3"}), 1}, {make_face({"1", "4"}), 1},
                             {make_face({"2", "4"}), 1}});
  EXPECT_EQ(b, four) << write_model(b);
  EXPECT_TRUE(rho_var(b).is_zero());
  EXPECT_TRUE(rho_sgt(b, cat()).is_zero());
}

// Blowing up the triple point of three coordinate planes in a threefold
// family: the exceptional divisor is P^2, its intersections with the strict
// transforms are lines, and the strict transforms gain one point blow-up.
TEST(Blowup, TriplePoint) {
  std::vector<Component> c;
  for (const char* id : {"1", "2", "3"}) c.push_back({ComponentId(id), 1, v("[P2]")});
  const SncModel m(2, c, {{make_face({"1", "2"}), v("[P1]")}, {make_face({"1", "3"}), v("[P1]")},
                          {make_face({"2", "3"}), v("[P1]")}, {make_face({"1", "2", "3"}), 1}});
  const SncModel b = blow_up_stratum(m, BlowupMove{make_face({"1", "2", "3"}), ComponentId("0")});
  EXPECT_EQ(*b.stratum(make_face({"1"})), v("L + [P2]"));
  EXPECT_EQ(*b.stratum(make_face({"1", "2"})), v("[P1]"));
  EXPECT_EQ(*b.stratum(make_face({"0"})), v("1 + L + L^2"));
  EXPECT_EQ(*b.stratum(make_face({"0", "1"})), v("1 + L"));
  EXPECT_EQ(*b.stratum(make_face({"0", "1", "2"})), VarElement(1));
  EXPECT_EQ(b.stratum(make_face({"1", "2", "3"})), nullptr);
  EXPECT_EQ(b.component(ComponentId("0"))->multiplicity, 3);
  EXPECT_TRUE(validate(b, cat()).empty());
  EXPECT_EQ(rho_var(b), rho_var(m));
  EXPECT_EQ(rho_sgt(b, cat()), rho_sgt(m, cat()));
}

TEST(Blowup, RejectsBadMoves) {
  EXPECT_EQ(move_error(cycle(3), "1", "9"), Errc::InvalidCenter);
  EXPECT_EQ(move_error(cycle(3), "1,2,3", "9"), Errc::InvalidCenter);
  EXPECT_EQ(move_error(cycle(3), "1,2", "3"), Errc::IdCollision);
  EXPECT_EQ(move_error(cycle(3), "1,7", "9"), Errc::InvalidCenter);
}

TEST(Blowup, SameCenterTwice) {
  SncModel m(1, {{ComponentId("1"), 1, v("1 + L")}, {ComponentId("2"), 1, v("1 + L")}}, {{make_face({"1", "2"}), 2}});
  const auto before_var = rho_var(m);
  m = blow_up_stratum(m, BlowupMove{make_face({"1", "2"}), ComponentId("a")});
  m = blow_up_stratum(m, BlowupMove{make_face({"1", "a"}), ComponentId("b")});
  m = blow_up_stratum(m, BlowupMove{make_face({"1", "b"}), ComponentId("c")});
  EXPECT_TRUE(validate(m, cat()).empty());
  EXPECT_EQ(rho_var(m), before_var);
}

class BlowupProperties : public ::testing::TestWithParam<int> {};

TEST_P(BlowupProperties, ChainsPreserveBothSpecializations) {
  testing::Rng rng(static_cast<std::uint64_t>(GetParam()) * 104729u);
  int moved = 0;
  for (int round = 0; round < 30; ++round) {
    const SncModel m = testing::random_model(rng, cat());
    const SncModel b = testing::random_blowup_chain(rng, m, 3);
    if (!(b == m)) ++moved;
    ASSERT_TRUE(validate(b, cat()).empty()) << write_model(b);
    EXPECT_EQ(rho_var(b), rho_var(m)) << write_model(m);
    EXPECT_EQ(rho_sgt(b, cat()), rho_sgt(m, cat()));
    EXPECT_EQ(rho_var_via_bundles(b), rho_var(b));
  }
  EXPECT_GT(moved, 5);
}

INSTANTIATE_TEST_SUITE_P(Seeds, BlowupProperties, ::testing::Range(1, 5));

}  // namespace
}  // namespace degenkit
