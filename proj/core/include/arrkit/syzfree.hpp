#pragma once

#include <stdexcept>
#include <string>

#include "arrkit/arrangement.hpp"
#include "arrkit/linalg.hpp"
#include "arrkit/singular.hpp"

namespace arrkit {

/// (d-1)^2 - r(d-1-r).
int tau_max(int d, int r);

/// dim (S / J_f)_k for f = f_red; 0 for k < 0.
int jacobian_hilbert(const Arrangement& arr, int k, const RankOptions& opt = {});
struct HilbertValue {
  int value = 0;
  /// False when the rank came from unverified modular images, in which case
  /// the value is an upper bound.
  bool proven = false;
};
HilbertValue jacobian_hilbert_value(const Arrangement& arr, int k, const RankOptions& opt = {});

enum class TjurinaMethod { local_sum, hilbert_stable };
std::string to_string(TjurinaMethod m);
TjurinaMethod parse_tjurina_method(const std::string& s);

class IncompleteLocus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DegreeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TjurinaOptions {
  int degree_guard = 12;
  bool force = false;
  RankOptions rank{RankMethod::automatic, 3, 200000};
};

struct TjurinaResult {
  int tau = 0;
  bool proven = false;
  /// Degree from which the Hilbert values were constant (hilbert_stable only).
  int stable_from = -1;
};

/// local_sum needs a complete report; hilbert_stable looks for three
/// consecutive equal Hilbert values from degree 2d + 1 on and is refused for
/// d > degree_guard unless forced.
TjurinaResult global_tjurina(const Arrangement& arr, TjurinaMethod method, const SingularLocusReport* report = nullptr,
                             const TjurinaOptions& opt = {});

struct MdrOptions {
  /// Used to confirm a rank deficiency seen modulo a prime.
  RankOptions confirm{RankMethod::exact, 3, 0};
};
/// Least r with a nonzero syzygy a f_x + b f_y + c f_z = 0, deg a = deg b = deg c = r.
int mdr(const Arrangement& arr, const MdrOptions& opt = {});

enum class FreenessKind { free, nearly_free, neither };

struct FreenessVerdict {
  int mdr = 0;
  FreenessKind kind = FreenessKind::neither;
  int d1 = 0;
  int d2 = 0;
  int tau_used = 0;
  int tau_max_reference = 0;
  std::string to_string() const;
};

FreenessVerdict classify_freeness(int d, int mdr, int tau);

/// (d-1)(d-2) + 1 - mu.
int euler_chi(const Arrangement& arr, int total_mu);

/// Requires a line arrangement with d >= 5 and no point of multiplicity
/// >= d - 1 (std::invalid_argument otherwise); true iff chi(U) >= d - 4.
bool line_chi_bound_check(const Arrangement& arr, const SingularLocusReport& report);

}  // namespace arrkit
