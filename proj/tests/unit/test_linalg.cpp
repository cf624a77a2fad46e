#include <gtest/gtest.h>

#include <random>

#include "arrkit/linalg.hpp"
#include "arrkit/modular.hpp"

using namespace arrkit;

namespace {

CycloNumber rnd(std::mt19937& rng) {
  std::uniform_int_distribution<int> a(-4, 4);
  return CycloNumber(std::vector<Rational>{Rational(a(rng)), Rational(a(rng), 1 + (a(rng) & 3))}, 3);
}

/// rows x cols matrix of rank at most r: product of random rows x r and r x cols.
SparseMatrix low_rank(std::mt19937& rng, int rows, int cols, int r) {
  std::vector<std::vector<CycloNumber>> a(rows, std::vector<CycloNumber>(r)), b(r, std::vector<CycloNumber>(cols));
  for (auto& row : a)
    for (auto& e : row) e = rnd(rng);
  for (auto& row : b)
    for (auto& e : row) e = rnd(rng);
  SparseMatrix m;
  m.cols = cols;
  for (int i = 0; i < rows; ++i) {
    std::vector<std::pair<int, CycloNumber>> row;
    for (int j = 0; j < cols; ++j) {
      CycloNumber s = CycloNumber::zero(3);
      for (int k = 0; k < r; ++k) s += a[i][k] * b[k][j];
      if (!s.is_zero()) row.emplace_back(j, s);
    }
    m.rows.push_back(row);
  }
  return m;
}

}  // namespace

TEST(Modular, PrimesAreOneModN) {
  for (int n : {3, 4, 8, 12}) {
    for (const auto& p : cyclo_primes(n, 3)) {
      EXPECT_TRUE(is_prime(p.field.p()));
      EXPECT_EQ((p.field.p() - 1) % n, 0u);
      EXPECT_EQ(p.field.pow(p.zeta, n), 1u);
      EXPECT_NE(p.field.pow(p.zeta, n / (n % 2 == 0 ? 2 : 3)), 1u);
    }
  }
}

TEST(Modular, FieldOps) {
  const PrimeField f(2147483629u);
  EXPECT_EQ(f.mul(f.inverse(12345u), 12345u), 1u);
  EXPECT_EQ(f.pow(3u, f.p() - 1), 1u);
}

TEST(Rank, ExactMatchesModularOnRandomMatrices) {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    const int rows = 4 + t % 7, cols = 3 + (t * 5) % 8, r = 1 + t % 4;
    const SparseMatrix m = low_rank(rng, rows, cols, r);
    const int exact = exact_rank(m);
    EXPECT_LE(exact, r);
    EXPECT_EQ(modular_rank(m, 1, false).rank, exact);
    const RankResult cert = modular_rank(m, 1, true);
    EXPECT_EQ(cert.rank, exact);
    EXPECT_TRUE(cert.proven);
    EXPECT_EQ(rank(m, {RankMethod::automatic, 3, 4000}).rank, exact);
  }
}

TEST(Rank, KernelBasis) {
  std::mt19937 rng(8);
  const SparseMatrix m = low_rank(rng, 5, 7, 3);
  const auto ker = kernel_basis(m);
  EXPECT_EQ(static_cast<int>(ker.size()), 7 - exact_rank(m));
  for (const auto& v : ker)
    for (const auto& row : m.rows) {
      CycloNumber s = CycloNumber::zero(3);
      for (const auto& [j, c] : row) s += c * v[j];
      EXPECT_TRUE(s.is_zero());
    }
}

TEST(Rank, MethodNames) {
  EXPECT_EQ(parse_rank_method(to_string(RankMethod::certified)), RankMethod::certified);
  EXPECT_THROW(parse_rank_method("fast"), std::invalid_argument);
}
