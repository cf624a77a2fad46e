#include <gtest/gtest.h>

#include "arrkit/multipoly.hpp"
#include "arrkit/parser.hpp"
#include "properties.hpp"

using namespace arrkit;

namespace {
MultiPoly P(const std::string& s) { return parse_poly(s, 3); }
}  // namespace

TEST(MultiPoly, ArithmeticAndOrder) {
  const MultiPoly p = P("x + y"), q = P("x - y");
  EXPECT_EQ(p * q, P("x^2 - y^2"));
  EXPECT_EQ(p.pow(3), P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_EQ((p * q).degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(P("z + y + x").to_string(), "x + y + z");
}

TEST(MultiPoly, Derivatives) {
  EXPECT_EQ(P("x^3*y + w*y*z^2").derivative(Var::z), P("2*w*y*z"));
  EXPECT_EQ(P("x^3*y").derivative(Var::x), P("3*x^2*y"));
}

TEST(MultiPoly, LeibnizAndEulerOnRandomPolynomials) {
  const auto out = arrkit::testing::leibniz_euler(200, 1234u);
  EXPECT_EQ(out.cases, 200);
  EXPECT_EQ(out.failures, 0) << (out.details.empty() ? "" : out.details.front());
}

TEST(MultiPoly, ExactDivisionAndProportionality) {
  const MultiPoly f = P("(x + w*y)*(x^2 - z^2)");
  ASSERT_TRUE(f.exact_divide(P("x - z")).has_value());
  EXPECT_EQ(*f.exact_divide(P("x - z")), P("(x + w*y)*(x + z)"));
  EXPECT_FALSE(f.exact_divide(P("x - y")).has_value());
  EXPECT_TRUE(P("2*x + 2*w*y").proportionality(P("x + w*y")).has_value());
  EXPECT_FALSE(P("x + y").proportionality(P("x - y")).has_value());
}

TEST(MultiPoly, Resultant) {
  // Two lines through (0:0:1) in x,y: resultant in z vanishes identically? No:
  // Res_x(x - y, x - z) = z - y up to sign.
  const MultiPoly r = resultant(P("x - y"), P("x - z"), Var::x);
  EXPECT_TRUE(r.proportionality(P("y - z")).has_value());
  EXPECT_TRUE(resultant(P("(x - y)*(x + z)"), P("(x - y)*z"), Var::x).is_zero());
}

TEST(MultiPoly, LinearSubstitutionAndEvaluation) {
  const MultiPoly f = P("x^2 + y*z");
  const ProjPoint p(1, 2, 3, 3);
  // p is stored as (1/3 : 2/3 : 1)
  EXPECT_EQ(f.evaluate(p), CycloNumber(Rational(7, 9), 3));
  Matrix3 swap = identity_matrix3(3);
  std::swap(swap[0], swap[1]);
  EXPECT_EQ(f.substitute_linear(swap), P("y^2 + x*z"));
}

TEST(MultiPoly, ConicClassification) {
  EXPECT_EQ(conic_classify(P("x^2 + y^2 + z^2")), ConicType::smooth);
  EXPECT_EQ(conic_classify(P("x^2 - y^2")), ConicType::line_pair);
  EXPECT_EQ(conic_classify(P("(x + y)^2")), ConicType::double_line);
}

TEST(MultiPoly, BinaryGcd) {
  const BinaryForm a{P("(x - y)*(x + 2*y)"), Var::x, Var::y};
  const BinaryForm b{P("(x - y)*(x - 3*y)"), Var::x, Var::y};
  EXPECT_EQ(binary_gcd(a, b).poly, P("x - y"));
}

TEST(ProjPoint, Normalization) {
  EXPECT_EQ(ProjPoint(2, 4, 2, 3), ProjPoint(1, 2, 1, 3));
  EXPECT_EQ(ProjPoint(3, 0, 0, 3).to_string(), "(1 : 0 : 0)");
  EXPECT_THROW(ProjPoint(0, 0, 0, 3), std::invalid_argument);
}
