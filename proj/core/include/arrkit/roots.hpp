#pragma once

#include <utility>
#include <vector>

#include "arrkit/univariate.hpp"

namespace arrkit {

struct RootSet {
  /// Distinct roots in Q(zeta_n) with multiplicities, sorted.
  std::vector<std::pair<CycloNumber, int>> roots;
  int degree = 0;

  int found() const;
  /// True when the polynomial splits into linear factors over Q(zeta_n).
  bool complete() const { return found() == degree; }
};

struct RootOptions {
  /// Upper limit on the p-adic precision, in bits, before a residue root is
  /// declared to have no preimage in Q(zeta_n).
  int max_bits = 1536;
};

/// Roots of f lying in Q(zeta_n). Works prime-by-prime: roots modulo a
/// split prime p are lifted p-adically and the power-basis coordinates are
/// recovered by lattice reduction, then checked exactly.
RootSet find_roots(const UniPoly& f, const RootOptions& opt = {});

/// Lenstra-Lenstra-Lovasz reduction (delta = 3/4) of integer row vectors.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

}  // namespace arrkit
