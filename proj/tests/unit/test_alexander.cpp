#include <gtest/gtest.h>

#include "arrkit/alexander.hpp"
#include "arrkit/catalog.hpp"
#include "properties.hpp"

using namespace arrkit;

TEST(RootMultiset, OrdersAndPrinting) {
  RootMultiset m(8);
  EXPECT_EQ(m.order_of(0), 1);
  EXPECT_EQ(m.order_of(4), 2);
  EXPECT_EQ(m.order_of(2), 4);
  EXPECT_EQ(m.order_of(3), 8);
  m[0] = 11;
  m.raise_order(8, 3);
  m.raise_order(4, 2);
  EXPECT_EQ(m.to_string(), "(t-1)^11 (t^2+1)^2 (t^4+1)^3");
  EXPECT_EQ(m.degree(), 11 + 4 + 12);
  EXPECT_THROW(m.raise_order(3, 1), std::invalid_argument);
  EXPECT_EQ(RootMultiset(5).to_string(), "1");
}

TEST(RootMultiset, Lattice) {
  RootMultiset a(4), b(4);
  a[0] = 2;
  a[1] = 1;
  b[0] = 1;
  b[2] = 3;
  EXPECT_EQ(pointwise_min(a, b)[0], 1);
  EXPECT_EQ(pointwise_max(a, b)[2], 3);
  EXPECT_TRUE(pointwise_min(a, b).leq(a));
  EXPECT_FALSE(a.leq(b));
  EXPECT_EQ((a + b)[0], 3);
  EXPECT_THROW(a += RootMultiset(6), std::invalid_argument);
}

TEST(ParseCandidate, Factors) {
  const RootMultiset m = parse_candidate("(t-1)^4*(t^4-1)^2", 8);
  EXPECT_EQ(m[0], 6);
  EXPECT_EQ(m[4], 2);
  EXPECT_EQ(m[2], 2);
  EXPECT_EQ(m[6], 2);
  EXPECT_EQ(m[1], 0);
  EXPECT_EQ(parse_candidate("(t^3+1)^2", 18)[3], 2);  // t = -w^... primitive 6th root
  EXPECT_EQ(parse_candidate("1", 6).degree(), 0);
  EXPECT_THROW(parse_candidate("(t^5-1)", 8), CandidateParseError);
  EXPECT_THROW(parse_candidate("(t-1)^", 8), CandidateParseError);
  EXPECT_THROW(parse_candidate("t^2+1", 8), CandidateParseError);
}

TEST(LocalAlexander, AgainstDivisionOracle) {
  const auto out = arrkit::testing::local_alexander_oracle(9);
  EXPECT_EQ(out.cases, 17);
  EXPECT_EQ(out.failures, 0) << (out.details.empty() ? "" : out.details.front());
  EXPECT_THROW(local_alexander(TypeTag{SingularityKind::other, 0}), UnsupportedSingularity);
}

TEST(LocalAlexander, DegreeCounts) {
  EXPECT_EQ(local_alexander({SingularityKind::A, 5}).degree(), 5);
  EXPECT_EQ(local_alexander({SingularityKind::ordinary, 8}).degree(), 8 * 6 + 1);
  const RootMultiset r = restrict_to_d(local_alexander({SingularityKind::A, 2}), 6);
  // cusp: roots of t^2 - t + 1, primitive 6th roots
  EXPECT_EQ(r[1], 1);
  EXPECT_EQ(r[5], 1);
  EXPECT_EQ(r.degree(), 2);
}

TEST(PencilBounds, Structures) {
  const RootMultiset lo = pencil_lower_bound(24, PencilStructure{PencilKind::halphen_reduced, 4, 2}, 12).bound;
  EXPECT_EQ(lo.to_string(), "(t-1)^11 (t+1)^2 (t^2+1)^2 (t^4+1)^3");
  const RootMultiset a = pencil_lower_bound(21, PencilStructure{PencilKind::halphen_nonreduced, 4, 2}, 12).bound;
  EXPECT_EQ(a[3], 2);  // order 7
  EXPECT_EQ(a[7], 0);  // order 3
  EXPECT_EQ(pencil_lower_bound(5, std::nullopt, 3).bound[0], 2);
}

TEST(PencilBounds, DetectedFromCatalog) {
  std::string why;
  const auto ps = pencil_structure(catalog_build("hesse_conics", {{"lambda", "2"}}), &why);
  ASSERT_TRUE(ps.has_value()) << why;
  EXPECT_EQ(ps->to_string(), "halphen_reduced(4,2)");
  const auto none = pencil_structure(catalog_build("cremona_pullback"), &why);
  EXPECT_FALSE(none.has_value());
  EXPECT_FALSE(why.empty());
}

TEST(Verify, CandidateChecks) {
  const Arrangement a = catalog_build("typeI_prop44");
  const auto rep = singular_locus(a);
  const AlexanderBounds b = alexander_bounds(a, rep);
  EXPECT_TRUE(verify_candidate(7, parse_candidate("(t-1)^4*(t^4-1)^2", 8), b, 4).pass);
  const auto below = verify_candidate(7, parse_candidate("(t-1)^6", 8), b, 4);
  EXPECT_FALSE(below.pass);
  const auto wrong_q0 = verify_candidate(7, parse_candidate("(t-1)^5*(t^4-1)^2", 8), b, 4);
  EXPECT_FALSE(wrong_q0.pass);
  const auto above = verify_candidate(7, parse_candidate("(t-1)^2*(t^4-1)^5", 8), b, 4);
  EXPECT_FALSE(above.pass);
}

TEST(Verify, DeltaTwoAndScreen) {
  RootMultiset d1(4);
  d1[0] = 2;
  const auto d2 = derive_delta2(d1, 3, 3);
  ASSERT_TRUE(d2.has_value());
  EXPECT_EQ((*d2)[0], 3 + 2 - 1);
  EXPECT_EQ((*d2)[1], 3);
  EXPECT_FALSE(derive_delta2(d1, -1, 3).has_value());
  EXPECT_EQ(conjecture_screen(parse_candidate("(t-1)^9*(t^7-1)^2", 21)), std::vector<int>{7});
  EXPECT_TRUE(conjecture_screen(parse_candidate("(t-1)^9*(t^4-1)^2", 12)).empty());
}
