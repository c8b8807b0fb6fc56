#include <gtest/gtest.h>

#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"

namespace degenkit {
namespace {

const Catalog& cat() { return Catalog::builtin(); }

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

TEST(Catalog, BuiltinExpansions) {
  EXPECT_EQ(cat().expand("P2"), VarElement::parse("1 + L + L^2"));
  EXPECT_EQ(cat().expand("E"), VarElement::label("E"));
  EXPECT_EQ(cat().expand("RatSurf_e12"), VarElement::parse("1 + 10*L + L^2"));
  EXPECT_EQ(cat().sgt_class("P2"), SgtElement::point(3));
  EXPECT_EQ(cat().sgt_class("RuledE"), SgtElement::parse("2*[E]"));
  EXPECT_EQ(cat().sgt_class("K3_X"), SgtElement::parse("[K3_X]"));
  EXPECT_THROW((void)cat().at("Nope"), Error);
}

// P^n from its cell decomposition: the fan of P^n is the face fan of a
// simplex, with binomial(n+1, k) cones of dimension k.
TEST(Catalog, ProjectiveSpacesMatchSimplexFan) {
  for (long n = 1; n <= 4; ++n) {
    std::vector<Integer> f;
    for (long k = 0; k <= n; ++k) f.push_back(binomial(n + 1, k));
    EXPECT_EQ(toric_class(f), cat().expand("P" + std::to_string(n))) << n;
    EXPECT_EQ(toric_class(f), VarElement::lefschetz_sum(static_cast<unsigned>(n + 1)));
  }
}

// Rational surfaces: P^2 (e = 3) and P^1 x P^1 (e = 4), then each point
// blow-up adds L; every rational surface with Euler number e is reached.
TEST(Catalog, RationalSurfacesFromIteratedBlowups) {
  VarElement surface = VarElement::lefschetz_sum(3);
  for (long e = 3; e <= 30; ++e) {
    const std::string label = "RatSurf_e" + std::to_string(e);
    ASSERT_TRUE(cat().contains(label)) << label;
    EXPECT_EQ(cat().expand(label), surface) << label;
    EXPECT_EQ(cat().at(label).euler, e);
    EXPECT_EQ(cat().sgt_class(label), SgtElement::point(e));
    surface += VarElement::lefschetz();
  }
  EXPECT_EQ(cat().expand("RatSurf_e4"), cat().expand("P1") * cat().expand("P1"));
  EXPECT_EQ(cat().expand("P1xP1"), cat().expand("RatSurf_e4"));
}

TEST(Catalog, ToricClassExamples) {
  EXPECT_EQ(toric_class({1, 2}), VarElement::parse("1 + L"));
  EXPECT_EQ(toric_class({1, 3, 3}), VarElement::parse("1 + L + L^2"));
  EXPECT_EQ(toric_class({1}), VarElement(1));
  EXPECT_EQ(toric_class({1, 4, 4}), VarElement::parse("1 + 2*L + L^2"));
  for (auto bad : {std::vector<long>{}, std::vector<long>{2, 3}, std::vector<long>{1, 0}, std::vector<long>{1, -2}}) {
    std::vector<Integer> f(bad.begin(), bad.end());
    try {
      (void)toric_class(f);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::MalformedFVector);
    }
  }
}

TEST(Catalog, EveryEntryIsConsistent) {
  for (const auto& name : cat().names()) {
    const auto& entry = cat().entry(name);
    if (entry.label.kind == LabelKind::Expandable) {
      EXPECT_EQ(euler(cat().expand(name), cat()), entry.label.euler) << name;
      EXPECT_EQ(cat().sgt_class(name), mu(cat().expand(name), cat())) << name;
    }
    if (entry.var_expansion) {
      EXPECT_EQ(euler(*entry.var_expansion, cat()), entry.label.euler) << name;
    }
  }
}

TEST(Catalog, TextRoundTrip) {
  const Catalog again = Catalog::parse(cat().to_text());
  EXPECT_EQ(again.to_text(), cat().to_text());
  EXPECT_EQ(again.names(), cat().names());
}

Errc catalog_error(const std::string& text) {
  try {
    (void)Catalog::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Io;  // sentinel: accepted
}

TEST(Catalog, RejectsInvalidEntries) {
  const std::string pt = "[pt]\ndim = 0\neuler = 1\nkind = expandable\nvar_expansion = 1\n\n";
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = 1\neuler = 3\nkind = expandable\nvar_expansion = 1 + L\n"),
            Errc::InvalidCatalog);  // euler mismatch
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = 0\neuler = 1\nkind = opaque\n"), Errc::InvalidCatalog);
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = 1\neuler = 0\nkind = opaque\nvar_expansion = [B]\n\n"
                               "[B]\ndim = 1\neuler = 0\nkind = opaque\nvar_expansion = [A]\n"),
            Errc::InvalidCatalog);  // cycle
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = 1\neuler = 0\nkind = opaque\nsgt_expansion = [Missing]\n"),
            Errc::InvalidCatalog);
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = 1\neuler = 0\nkind = weird\n"), Errc::Parse);
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = x\neuler = 0\nkind = opaque\n"), Errc::Parse);
  EXPECT_EQ(catalog_error(pt + "[A]\ndim = 1\neuler = 2\nkind = expandable\nvar_expansion = 1 + L\n"), Errc::Io);
}

}  // namespace
}  // namespace degenkit
