#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"
#include "arrkit/linalg.hpp"

namespace arrkit {

enum class SingularityKind { A, ordinary, other };

/// A_n(n), ordinary_m(m) or other.
struct TypeTag {
  SingularityKind kind = SingularityKind::other;
  int n = 0;
  std::string to_string() const;
  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

struct LocalSingularity {
  ProjPoint point;
  /// Equation in the affine chart of the point, translated to the origin;
  /// x and y play the role of the local coordinates.
  MultiPoly local_eq;
  int mult = 0;
  int mu = 0;
  int tau = 0;
  bool ordinary = false;
  bool quasi_homogeneous = false;
  TypeTag type;
};

enum class Certification { none, tau_max, hilbert };
std::string to_string(Certification c);

struct SingularLocusReport {
  std::vector<LocalSingularity> singularities;
  int total_mu = 0;
  int total_tau = 0;
  bool complete = false;
  Certification certification = Certification::none;
  /// Intersection loci whose points are not all defined over the field.
  std::vector<std::string> unresolved;
  /// mdr found while certifying, if it was computed.
  std::optional<int> mdr;
};

class NonIsolatedSingularity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalOptions {
  RankOptions rank{RankMethod::exact, 3, 4000};
};

bool verify_singular(const Arrangement& arr, const ProjPoint& pt);
/// Throws std::invalid_argument when pt is not on the curve.
int multiplicity_at(const Arrangement& arr, const ProjPoint& pt);

/// dim K[u,v] / ((g_u, g_v) + m^N) for the given N.
int local_milnor_truncated(const MultiPoly& local_eq, int n, const LocalOptions& opt = {});
/// dim K[u,v] / ((g, g_u, g_v) + m^N) for the given N.
int local_tjurina_truncated(const MultiPoly& local_eq, int n, const LocalOptions& opt = {});
/// Throws NonIsolatedSingularity when the dimension exceeds (deg - 1)^2.
int local_milnor(const MultiPoly& local_eq, const LocalOptions& opt = {});
int local_tjurina(const MultiPoly& local_eq, const LocalOptions& opt = {});

/// The tangent cone (lowest jet, of degree mult) is squarefree.
bool is_ordinary(const MultiPoly& local_eq, int mult);
TypeTag classify_type(const LocalSingularity& s);

/// Full local analysis at a singular point of f_red.
LocalSingularity analyze_point(const Arrangement& arr, const ProjPoint& pt, const LocalOptions& opt = {});

struct DiscoveryResult {
  std::vector<ProjPoint> points;
  std::vector<std::string> unresolved;
};
/// Intersection points of all pairs of components and the singular points of
/// components of degree >= 3 that are defined over the field.
DiscoveryResult discover_points(const Arrangement& arr);
/// Points common to two curves (finitely many assumed); `complete` is false
/// when some of them are not defined over the field.
struct IntersectionResult {
  std::vector<ProjPoint> points;
  bool complete = true;
};
IntersectionResult intersect_curves(const MultiPoly& p, const MultiPoly& q);

struct SingularOptions {
  LocalOptions local;
  /// Try to certify completeness.
  bool certify = true;
  /// Largest d for which the Hilbert-function certificate is attempted.
  int hilbert_certify_limit = 24;
  bool discover = true;
};

/// Analyzes the known points of arr, the extra candidates and (unless
/// disabled) discovered intersection points; the result is sorted by point.
SingularLocusReport singular_locus(const Arrangement& arr, const std::vector<ProjPoint>& extra = {},
                                   const SingularOptions& opt = {});

}  // namespace arrkit
