#include <gtest/gtest.h>

#include "arrkit/arrangement.hpp"
#include "arrkit/catalog.hpp"
#include "arrkit/parser.hpp"
#include "arrkit/pencil.hpp"

using namespace arrkit;

namespace {
MultiPoly P(const std::string& s) { return parse_poly(s, 3); }
}  // namespace

TEST(Arrangement, DegreeAndReduction) {
  const Arrangement a(3, {{P("x"), 2, "x", true}, {P("y"), 1, "y", true}, {P("x^2+y^2+z^2"), 1, "Q", true}});
  EXPECT_EQ(a.degree(), 4);
  EXPECT_EQ(a.count(), 3);
  EXPECT_TRUE(a.has_multiplicities());
  EXPECT_EQ(a.f(), P("x^2*y*(x^2+y^2+z^2)"));
  EXPECT_EQ(a.f_red(), P("x*y*(x^2+y^2+z^2)"));
}

TEST(Arrangement, RejectsRepeatedComponents) {
  EXPECT_THROW(Arrangement(3, {{P("x"), 1, "a", true}, {P("2*x"), 1, "b", true}}), InvalidArrangement);
}

TEST(Arrangement, JsonRoundTrip) {
  for (const auto& e : catalog()) {
    if (!e.params.empty() && !e.params.front().default_value) continue;
    const Arrangement a = catalog_build(e.name);
    const nlohmann::json j = to_json(a);
    const Arrangement b = arrangement_from_json(j);
    EXPECT_EQ(to_json(b), j) << e.name;
    EXPECT_EQ(b.f(), a.f()) << e.name;
  }
}

TEST(Arrangement, JsonErrors) {
  EXPECT_THROW(arrangement_from_json(nlohmann::json::parse(R"({"field_order": 3})")), InvalidArrangement);
  EXPECT_THROW(arrangement_from_json(nlohmann::json::parse(R"({"field_order": 3, "components": [{"poly": "x +"}]})")),
               std::exception);
}

TEST(Catalog, ListsDegenerations) {
  int named = 0;
  for (const auto& e : catalog())
    if (e.name.size() >= 2 && (e.name[0] == 'A' || e.name[0] == 'B') && e.params.empty()) ++named;
  EXPECT_GE(named, 14);
  EXPECT_GE(catalog().size(), 14u);
  EXPECT_THROW(catalog_entry("nope"), CatalogError);
}

TEST(Catalog, Monomial) {
  const Arrangement a = catalog_build("monomial", {{"m", "3"}});
  EXPECT_EQ(a.count(), 9);
  EXPECT_EQ(a.degree(), 9);
  EXPECT_THROW(catalog_build("monomial", {{"m", "0"}}), CatalogError);
  EXPECT_THROW(catalog_build("monomial", {{"k", "3"}}), CatalogError);
}

TEST(Catalog, SpecialLambdaRejected) {
  try {
    catalog_build("hesse_conics", {{"lambda", "0"}});
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_NE(std::string(e.what()).find("A0"), std::string::npos);
  }
  EXPECT_THROW(catalog_build("hesse_conics", {{"lambda", "-2*w"}}), CatalogError);
}

TEST(Catalog, PencilMembersAreMembers) {
  for (const auto& e : catalog()) {
    if (!e.params.empty() && !e.params.front().default_value) continue;
    const Arrangement a = catalog_build(e.name);
    if (!a.pencil) continue;
    MultiPoly prod = MultiPoly::constant(1, a.field_order());
    for (const auto& m : a.pencil->members) {
      const auto param = pencil_membership(a.pencil->member_poly(m), *a.pencil);
      EXPECT_TRUE(param.has_value()) << e.name;
      const auto support = a.pencil->member_support(m);
      ASSERT_TRUE(support.has_value()) << e.name;
      prod *= *support;
    }
    EXPECT_TRUE(prod.proportionality(a.f_red()).has_value()) << e.name;
    if (a.pencil->h) EXPECT_TRUE(halphen_verify(*a.pencil)) << e.name;
  }
}

TEST(Catalog, HesseConfiguration) {
  const CycloNumber lam(2, 3);
  const auto conics = hesse_conics(lam);
  for (const auto& p : hesse_points(lam)) {
    int on = 0;
    for (const auto& c : conics) on += c.evaluate(p).is_zero() ? 1 : 0;
    EXPECT_EQ(on, 8);
  }
  for (const auto& c : conics) {
    EXPECT_EQ(conic_classify(c), ConicType::smooth);
    int on = 0;
    for (const auto& p : hesse_points(lam)) on += c.evaluate(p).is_zero() ? 1 : 0;
    EXPECT_EQ(on, 6);
  }
}

TEST(Pencil, Membership) {
  PencilSpec p{P("x^2 - y^2"), P("y^2 - z^2"), std::nullopt, 1, {}};
  EXPECT_TRUE(pencil_membership(P("x^2 - z^2"), p).has_value());
  EXPECT_TRUE(pencil_membership(P("y^2 - z^2"), p).has_value());
  EXPECT_FALSE(pencil_membership(P("x*y"), p).has_value());
}

TEST(Pencil, HalphenAtTwo) {
  const Arrangement a = catalog_build("hesse_conics", {{"lambda", "2"}});
  ASSERT_TRUE(a.pencil && a.pencil->h);
  EXPECT_EQ(*a.pencil->h, P("2*x^3 + 2*y^3 + 2*z^3 - 10*x*y*z"));
  EXPECT_TRUE(halphen_verify(*a.pencil));
  EXPECT_FALSE(pencil_membership(P("x^6"), *a.pencil).has_value());
}

TEST(Pencil, GroupInvariance) {
  EXPECT_TRUE(group_invariance(catalog_build("hesse_conics", {{"lambda", "2"}}), hesse_group_generators()));
  Matrix3 swap = identity_matrix3(3);
  std::swap(swap[0], swap[1]);
  EXPECT_TRUE(group_invariance(catalog_build("monomial", {{"m", "3"}}), {swap}));
  EXPECT_FALSE(group_invariance(Arrangement(3, {{P("x"), 1, "x", true}}), {swap}));
}

TEST(Pencil, ConicPencilTypes) {
  EXPECT_EQ(conic_pencil_type(P("x^2 - y^2"), P("y^2 - z^2")), ConicPencilType::I);
  EXPECT_EQ(conic_pencil_type(P("(x+y+z)^2"), P("x*y")), ConicPencilType::IV);
  EXPECT_EQ(conic_pencil_type(P("x^2"), P("x*y - z^2")), ConicPencilType::V);
}
