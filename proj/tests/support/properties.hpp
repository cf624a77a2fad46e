#pragma once

#include <random>
#include <string>
#include <vector>

#include "arrkit/multipoly.hpp"

namespace arrkit::testing {

struct PropertyOutcome {
  int cases = 0;
  int skipped = 0;
  int failures = 0;
  std::vector<std::string> details;
  bool ok() const { return failures == 0 && cases > 0; }
};

/// Homogeneous polynomial of the given degree with small coefficients in Q(w).
MultiPoly random_form(std::mt19937& rng, int degree, int order = 3);

/// d/dv (pq) = p_v q + p q_v for each variable, and Euler's relation
/// x f_x + y f_y + z f_z = deg(f) f.
PropertyOutcome leibniz_euler(int count, unsigned seed);

/// mu and tau of random isolated plane curve germs are unchanged by random
/// invertible changes of local coordinates (linear part plus a quadratic term).
PropertyOutcome mu_tau_coordinate_invariance(int count, unsigned seed);

/// local_alexander against the cyclotomic factorization of
/// (t^(n+1) - (-1)^(n+1)) / (t + 1) and (t^m - 1)^(m-2) (t - 1), found by
/// repeated exact division, for 1 <= n <= max and 2 <= m <= max.
PropertyOutcome local_alexander_oracle(int max);

/// line_chi_bound_check on random arrangements of 5..8 lines; arrangements
/// outside its preconditions are skipped and redrawn.
PropertyOutcome line_chi_bound(int count, unsigned seed);

}  // namespace arrkit::testing
