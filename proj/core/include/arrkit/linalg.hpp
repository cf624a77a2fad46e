#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrkit/cyclotomic.hpp"
#include "arrkit/multipoly.hpp"

namespace arrkit {

/// Row-sparse matrix over Q(zeta_n); each row holds (column, value) pairs
/// with distinct columns and nonzero values.
struct SparseMatrix {
  int order = 3;
  int cols = 0;
  std::vector<std::vector<std::pair<int, CycloNumber>>> rows;
};

enum class RankMethod { automatic, exact, modular, certified };
std::string to_string(RankMethod m);
RankMethod parse_rank_method(const std::string& s);

struct RankOptions {
  RankMethod method = RankMethod::automatic;
  /// Number of primes in modular mode; the rank is the maximum over them.
  int primes = 3;
  /// Automatic mode uses exact elimination when rows * cols is at most this.
  long exact_threshold = 4000;
};

struct RankResult {
  int rank = 0;
  /// True for exact elimination and for the certified modular mode.
  bool proven = false;
  RankMethod method = RankMethod::exact;
};

/// Gaussian elimination over Q(zeta_n).
int exact_rank(const SparseMatrix& m);

/// Rank over Q(zeta_n) computed modulo primes of degree one. Each prime gives
/// a lower bound; in certified mode enough primes are used that the maximum
/// equals the true rank (Hadamard bound on the norm of a maximal minor).
RankResult modular_rank(const SparseMatrix& m, int primes, bool certified);

RankResult rank(const SparseMatrix& m, const RankOptions& opt = {});

/// Basis of the right kernel {v : M v = 0}, one vector per free column.
std::vector<std::vector<CycloNumber>> kernel_basis(const SparseMatrix& m);

/// Rows are multiples mono * generator, expressed in the column monomials.
/// Terms of degree >= truncate_below are dropped when that is nonnegative;
/// any other term outside the column set is an error.
struct MacaulaySystem {
  int order = 3;
  std::vector<MultiPoly> generators;
  std::vector<std::pair<int, Monomial>> rows;
  std::vector<Monomial> columns;
  int truncate_below = -1;

  SparseMatrix to_matrix() const;
};

}  // namespace arrkit
