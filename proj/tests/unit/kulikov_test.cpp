#include <gtest/gtest.h>

#include "degenkit/blowup.hpp"
#include "degenkit/error.hpp"
#include "degenkit/kulikov.hpp"

namespace degenkit {
namespace {

const Catalog& cat() { return Catalog::builtin(); }

Errc chain_error(TypeIIData d) {
  try {
    (void)build_type_ii(d, cat());
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Io;
}

TEST(Kulikov, TypeIIChains) {
  for (long r = 1; r <= 6; ++r) {
    for (auto [e0, er] : {std::pair{12, 12}, std::pair{3, 21}, std::pair{10, 14}, std::pair{5, 5}}) {
      const SncModel m = build_type_ii(TypeIIData{r, e0, er, "E", ""}, cat());
      ASSERT_TRUE(validate(m, cat()).empty());
      EXPECT_EQ(m.components().size(), static_cast<std::size_t>(r + 1));
      const SgtElement rho = rho_sgt(m, cat());
      EXPECT_EQ(rho, SgtElement::point(e0 + er) - SgtElement::parse("2*[E]")) << r;
      EXPECT_EQ(rho_var(m), rho_var_via_bundles(m));
      EXPECT_EQ(mu(rho_var(m), cat()), rho);
    }
  }
  const SncModel r1 = build_type_ii(TypeIIData{1, 12, 12, "E", ""}, cat());
  EXPECT_EQ(rho_sgt(r1, cat()).to_string(), "24*[pt] - 2*[E]");
  const auto warnings = k3_euler_warnings(rho_sgt(r1, cat()));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings.front().find("24"), std::string::npos);

  // a second elliptic curve with its own ruled surface
  const SncModel other = build_type_ii(TypeIIData{3, 12, 12, "E2", "RuledE2"}, cat());
  EXPECT_EQ(rho_sgt(other, cat()).to_string(), "24*[pt] - 2*[E2]");
}

TEST(Kulikov, TypeIIRejectsBadData) {
  EXPECT_EQ(chain_error({0, 12, 12, "E", ""}), Errc::BadChain);
  EXPECT_EQ(chain_error({1, 2, 12, "E", ""}), Errc::BadChain);
  EXPECT_EQ(chain_error({1, 12, 12, "C2", ""}), Errc::BadChain);
  EXPECT_EQ(chain_error({1, 12, 12, "Nope", ""}), Errc::UnknownLabel);
  EXPECT_EQ(chain_error({2, 12, 12, "E", "Nope"}), Errc::UnknownLabel);
  EXPECT_EQ(chain_error({1, 12, 500, "E", ""}), Errc::UnknownLabel);
}

TypeIIIData tetrahedron(std::vector<long> eulers) {
  TypeIIIData d;
  for (long i = 1; i <= 4; ++i) d.vertices.emplace_back(ComponentId(std::to_string(i)), eulers[i - 1]);
  for (long i = 1; i <= 4; ++i)
    for (long j = i + 1; j <= 4; ++j) d.edges.push_back(make_face({ComponentId(std::to_string(i)), ComponentId(std::to_string(j))}));
  for (long i = 1; i <= 4; ++i) {
    Face f;
    for (long j = 1; j <= 4; ++j)
      if (j != i) f.emplace_back(std::to_string(j));
    d.faces.push_back(make_face(f));
  }
  return d;
}

TEST(Kulikov, TypeIIIComplexes) {
  const TypeIIIModel tet = build_type_iii(tetrahedron({3, 3, 3, 3}));
  EXPECT_TRUE(tet.warnings.empty());
  ASSERT_TRUE(validate(tet.model, cat()).empty());
  EXPECT_TRUE(rho_sgt(tet.model, cat()).is_zero());
  EXPECT_EQ(rho_var(tet.model), rho_var_via_bundles(tet.model));

  // sum e_i - 4 E + 3 F
  for (auto eulers : {std::vector<long>{4, 3, 3, 3}, std::vector<long>{5, 9, 3, 3}, std::vector<long>{3, 3, 3, 3}}) {
    const TypeIIIModel m = build_type_iii(tetrahedron(eulers));
    long sum = 0;
    for (long e : eulers) sum += e;
    EXPECT_EQ(rho_sgt(m.model, cat()), SgtElement::point(sum - 4 * 6 + 3 * 4));
  }

  TypeIIIData open = tetrahedron({3, 3, 3, 3});
  open.edges.erase(open.edges.begin() + 1);  // {1,3}
  try {
    (void)build_type_iii(open);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAComplex);
  }

  TypeIIIData disk = tetrahedron({3, 3, 3, 3});
  disk.faces.pop_back();
  const TypeIIIModel d = build_type_iii(disk);
  ASSERT_EQ(d.warnings.size(), 1u);
  EXPECT_NE(d.warnings.front().find("V - E + F = 1"), std::string::npos);
}

TEST(Kulikov, BlowingUpDoubleCurvesAndTriplePoints) {
  const SncModel chain = build_type_ii(TypeIIData{2, 12, 12, "E", ""}, cat());
  const SncModel b = blow_up_stratum(chain, BlowupMove{make_face({"0", "1"}), ComponentId("x")});
  EXPECT_TRUE(validate(b, cat()).empty());
  EXPECT_EQ(rho_var(b), rho_var(chain));
  EXPECT_EQ(rho_sgt(b, cat()), rho_sgt(chain, cat()));

  const SncModel tet = build_type_iii(tetrahedron({3, 4, 5, 3})).model;
  for (const char* center : {"1,2", "1,2,3"}) {
    const SncModel t = blow_up_stratum(tet, BlowupMove{parse_face(center), ComponentId("x")});
    EXPECT_TRUE(validate(t, cat()).empty());
    EXPECT_EQ(rho_var(t), rho_var(tet)) << center;
    EXPECT_EQ(rho_sgt(t, cat()), rho_sgt(tet, cat())) << center;
  }
}

TEST(Kulikov, ParsesFiles) {
  const TypeIIData d = parse_type_ii(kv::Document::parse("kind = kulikov-ii\nr = 3\nend_eulers = 10, 14\n"));
  EXPECT_EQ(d.r, 3);
  EXPECT_EQ(d.first_end_euler, 10);
  EXPECT_EQ(d.last_end_euler, 14);
  EXPECT_EQ(d.elliptic_label, "E");
  EXPECT_THROW(parse_type_ii(kv::Document::parse("kind = kulikov-ii\nr = 3\nend_eulers = 10\n")), Error);
  EXPECT_THROW(parse_type_ii(kv::Document::parse("kind = kulikov-ii\nr = 3\nend_eulers = 1, 2\nbogus = 1\n")), Error);

  const TypeIIIData t = parse_type_iii(kv::Document::parse(
      "kind = kulikov-iii\n[vertices]\n1 = 3\n2 = 3\n3 = 3\n[edges]\n1,2\n2,3\n1,3\n[faces]\n1,2,3\n"));
  EXPECT_EQ(t.vertices.size(), 3u);
  EXPECT_EQ(t.edges.size(), 3u);
  EXPECT_EQ(t.faces.size(), 1u);
}

}  // namespace
}  // namespace degenkit
