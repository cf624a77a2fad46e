#include <gtest/gtest.h>

#include "arrkit/cyclotomic.hpp"

using namespace arrkit;

TEST(Cyclotomic, PhiCoefficients) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), (std::vector<Integer>{1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Integer>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(7), 6);
}

TEST(Cyclotomic, ZetaHasExactOrder) {
  for (int n : {3, 4, 5, 8, 12}) {
    const CycloNumber z = CycloNumber::zeta(n);
    EXPECT_TRUE(z.pow(n).is_one()) << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(z.pow(k).is_one()) << n << " " << k;
  }
}

TEST(Cyclotomic, CanonicalFormModuloPhi) {
  const CycloNumber w = CycloNumber::zeta(3);
  // w^2 = -1 - w
  EXPECT_EQ(w * w, CycloNumber(-1, 3) - w);
  EXPECT_EQ((w * w).to_string(), "-1 - w");
  EXPECT_TRUE((CycloNumber::one(3) + w + w * w).is_zero());
}

TEST(Cyclotomic, FieldAxioms) {
  const CycloNumber a = parse_cyclo("2 - 3*w", 3), b = parse_cyclo("1/2 + w", 3), c = parse_cyclo("-7/5", 3);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(a / b * b, a);
  EXPECT_THROW(a / CycloNumber::zero(3), DivisionByZero);
}

TEST(Cyclotomic, NormAndGalois) {
  const CycloNumber w = CycloNumber::zeta(3);
  EXPECT_EQ(w.galois(2), w * w);
  // N(a + b w) = a^2 - ab + b^2
  EXPECT_EQ(parse_cyclo("2 + 3*w", 3).norm(), Rational(4 - 6 + 9));
  const CycloNumber i = CycloNumber::zeta(4);
  EXPECT_EQ((i * i), CycloNumber(-1, 4));
  EXPECT_EQ(parse_cyclo("1 + w", 4).norm(), Rational(2));
}

TEST(Cyclotomic, FieldMismatchThrows) {
  EXPECT_THROW(CycloNumber::zeta(3) + CycloNumber::zeta(4), FieldMismatch);
}

TEST(Cyclotomic, TextRoundTrip) {
  for (const char* s : {"0", "1", "-1/2 + 3*w", "w", "-w", "5/7 - 2/3*w"}) {
    const CycloNumber c = parse_cyclo(s, 3);
    EXPECT_EQ(parse_cyclo(c.to_string(), 3), c) << s;
  }
}
