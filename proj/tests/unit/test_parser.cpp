#include <gtest/gtest.h>

#include <random>

#include "arrkit/parser.hpp"
#include "properties.hpp"

using namespace arrkit;

TEST(Parser, Grammar) {
  EXPECT_EQ(parse_poly("x^2 - 2*x*y + y^2", 3), parse_poly("(x - y)^2", 3));
  EXPECT_EQ(parse_poly(" 1/2 * w * z ", 3).to_string(), "1/2*w*z");
  EXPECT_EQ(parse_poly("-x", 3), -parse_poly("x", 3));
  EXPECT_EQ(parse_poly("w^3", 3), MultiPoly::constant(1, 3));
}

TEST(Parser, Errors) {
  for (const char* bad : {"", "x +", "x^", "(x", "x*/y", "q", "1/0", "x^-1"}) {
    EXPECT_THROW(parse_poly(bad, 3), ParseError) << bad;
  }
  try {
    parse_poly("x + (y", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(Parser, PrintParseRoundTrip) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = arrkit::testing::random_form(rng, i % 6);
    EXPECT_EQ(parse_poly(p.to_string(), 3), p) << p.to_string();
  }
}

TEST(Parser, OtherFields) {
  const MultiPoly p = parse_poly("x^4 - w^2*y^4", 4);
  EXPECT_EQ(p, parse_poly("x^4 + y^4", 4));
}
