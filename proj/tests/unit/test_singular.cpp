#include <gtest/gtest.h>

#include "arrkit/catalog.hpp"
#include "arrkit/parser.hpp"
#include "arrkit/singular.hpp"
#include "properties.hpp"

using namespace arrkit;

namespace {
MultiPoly P(const std::string& s) { return parse_poly(s, 3); }
}  // namespace

TEST(LocalInvariants, NormalForms) {
  for (int n = 1; n <= 8; ++n) {
    const MultiPoly g = P("y^2 - x^" + std::to_string(n + 1));
    EXPECT_EQ(local_milnor(g), n);
    EXPECT_EQ(local_tjurina(g), n);
  }
  EXPECT_EQ(local_milnor(P("x^3 + y^4")), 6);  // E6
  EXPECT_EQ(local_milnor(P("x^3 + y^5")), 8);  // E8
  EXPECT_EQ(local_milnor(P("x*y*(x - y)*(x + y)")), 9);
  EXPECT_EQ(local_tjurina(P("x*y*(x - y)*(x + y)")), 9);
}

TEST(LocalInvariants, NonQuasiHomogeneous) {
  // x^4 + y^5 + x^2 y^3: mu = 12, tau = 11
  EXPECT_EQ(local_milnor(P("x^4 + y^5 + x^2*y^3")), 12);
  EXPECT_EQ(local_tjurina(P("x^4 + y^5 + x^2*y^3")), 11);
}

TEST(LocalInvariants, TruncationIsMonotone) {
  const MultiPoly g = P("x^4 + y^5 + x^2*y^3");
  int last = 0;
  for (int n = 1; n <= 12; ++n) {
    const int v = local_milnor_truncated(g, n);
    EXPECT_GE(v, last);
    last = v;
  }
  EXPECT_EQ(last, 12);
}

TEST(LocalInvariants, NonIsolatedThrows) {
  EXPECT_THROW(local_milnor(P("x^2*y")), NonIsolatedSingularity);
}

TEST(LocalInvariants, CoordinateChangeInvariance) {
  const auto out = arrkit::testing::mu_tau_coordinate_invariance(20, 3u);
  EXPECT_EQ(out.cases, 20);
  EXPECT_EQ(out.failures, 0) << (out.details.empty() ? "" : out.details.front());
}

TEST(LocalInvariants, Ordinary) {
  EXPECT_TRUE(is_ordinary(P("x*y*(x - y)"), 3));
  EXPECT_FALSE(is_ordinary(P("y^2 - x^3"), 2));
  EXPECT_FALSE(is_ordinary(P("x^2*y + y^4"), 3));
}

TEST(SingularPoints, Verification) {
  const Arrangement a(3, {{P("x"), 1, "x", true}, {P("y"), 1, "y", true}, {P("x + y - z"), 1, "l", true}});
  EXPECT_TRUE(verify_singular(a, ProjPoint(0, 0, 1, 3)));
  EXPECT_FALSE(verify_singular(a, ProjPoint(0, 1, 2, 3)));
  EXPECT_EQ(multiplicity_at(a, ProjPoint(0, 0, 1, 3)), 2);
  EXPECT_THROW(multiplicity_at(a, ProjPoint(1, 1, 1, 3)), std::invalid_argument);
}

TEST(SingularPoints, IntersectCurves) {
  const auto r = intersect_curves(P("x^2 + y^2 - 2*z^2"), P("x - y"));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.points.size(), 2u);
  const auto s = intersect_curves(P("x^2 - 2*z^2"), P("y"));
  EXPECT_FALSE(s.complete);  // sqrt(2) is not in Q(w)
}

TEST(SingularLocus, GenericLinesAreNodes) {
  const Arrangement a(3, {{P("x"), 1, "x", true},
                          {P("y"), 1, "y", true},
                          {P("z"), 1, "z", true},
                          {P("x + 2*y + 3*z"), 1, "l", true}});
  const auto rep = singular_locus(a);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.singularities.size(), 6u);
  EXPECT_EQ(rep.total_mu, 6);
  for (const auto& s : rep.singularities) EXPECT_EQ(s.type.to_string(), "A_1");
}

TEST(SingularLocus, PropTypeI) {
  const auto rep = singular_locus(catalog_build("typeI_prop44"));
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.total_mu, 39);
  EXPECT_EQ(rep.total_tau, 39);
  for (std::size_t i = 1; i < rep.singularities.size(); ++i)
    EXPECT_TRUE(rep.singularities[i - 1].point < rep.singularities[i].point);
}

TEST(SingularLocus, MissingPointsAreNotCertified) {
  // Without discovery the known points of B0 alone leave the nodes out.
  Arrangement b0 = catalog_build("B0");
  SingularOptions opt;
  opt.discover = false;
  const auto rep = singular_locus(b0, {}, opt);
  if (rep.singularities.size() < 18u) EXPECT_FALSE(rep.complete);
}
