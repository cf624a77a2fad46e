#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrkit/arrangement.hpp"
#include "arrkit/singular.hpp"

namespace arrkit {

/// Multiplicities of the d-th roots of unity alpha_q = exp(-2 pi i q / d).
class RootMultiset {
 public:
  explicit RootMultiset(int d = 1);
  int d() const { return static_cast<int>(m_.size()); }
  int operator[](int q) const { return m_.at(q); }
  int& operator[](int q) { return m_.at(q); }
  const std::vector<int>& values() const { return m_; }
  /// Multiplicative order of alpha_q.
  int order_of(int q) const;
  int degree() const;
  /// Sets every root of exact order n to at least v.
  void raise_order(int n, int v);

  RootMultiset& operator+=(const RootMultiset& o);
  friend RootMultiset operator+(RootMultiset a, const RootMultiset& b) { return a += b; }
  friend RootMultiset pointwise_min(const RootMultiset& a, const RootMultiset& b);
  friend RootMultiset pointwise_max(const RootMultiset& a, const RootMultiset& b);
  /// Pointwise <=.
  bool leq(const RootMultiset& o) const;
  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

  /// Product of cyclotomic factors when the multiplicity is constant on each
  /// Galois orbit, e.g. "(t-1)^11 (t+1)^2 (t^2+1)^2 (t^4+1)^3"; "1" if empty.
  std::string to_string() const;

 private:
  void check(const RootMultiset& o) const;
  std::vector<int> m_;
};

/// Roots of unity exp(-2 pi i r / n) with r / n in lowest terms (0/1 for 1).
class AbstractRoots {
 public:
  void add(int r, int n, int mult = 1);
  const std::map<std::pair<int, int>, int>& entries() const { return e_; }
  AbstractRoots& operator+=(const AbstractRoots& o);
  int degree() const;

 private:
  std::map<std::pair<int, int>, int> e_;
};

class UnsupportedSingularity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Roots of (t^(n+1) - (-1)^(n+1)) / (t + 1) for A_n and of
/// (t^m - 1)^(m-2) (t - 1) for an ordinary m-fold point.
AbstractRoots local_alexander(const TypeTag& tag);
RootMultiset restrict_to_d(const AbstractRoots& roots, int d);

struct UpperBound {
  RootMultiset bound;
  std::vector<std::string> used;
  std::vector<std::string> skipped;
};
/// Minimum over irreducible components of the product of the local data of
/// the singular points on the component. nullopt when every component meets
/// an unsupported singularity or when the report is not complete.
std::optional<UpperBound> try_component_upper_bound(const Arrangement& arr, const SingularLocusReport& report);
/// Same, throwing std::runtime_error("no valid divisor bound").
UpperBound component_upper_bound(const Arrangement& arr, const SingularLocusReport& report);

enum class PencilKind { reduced_members, halphen_reduced, halphen_nonreduced };
std::string to_string(PencilKind k);

struct PencilStructure {
  PencilKind kind = PencilKind::reduced_members;
  int ell = 0;
  int k = 1;
  std::string to_string() const;
};

/// Derives the structure from the attached pencil after checking that the
/// member curves multiply to f_red; the reason is filled on failure.
std::optional<PencilStructure> pencil_structure(const Arrangement& arr, std::string* reason = nullptr);

struct LowerBound {
  RootMultiset bound;
  std::vector<std::string> sources;
};
/// Throws std::invalid_argument when a needed order does not divide d.
LowerBound pencil_lower_bound(int d, const std::optional<PencilStructure>& ps, int r);

struct AlexanderBounds {
  RootMultiset lower;
  std::optional<RootMultiset> upper;
  std::vector<int> exact_at;
  bool determined = false;
  /// False when lower exceeds upper somewhere.
  bool consistent = true;
  std::vector<std::string> lower_sources;
  std::vector<std::string> upper_components;
  std::vector<std::string> skipped_components;
};

AlexanderBounds alexander_bounds(const Arrangement& arr, const SingularLocusReport& report);

/// Delta^2(q) = chi + Delta^1(q) - [q = 0]; nullopt when some value is negative.
std::optional<RootMultiset> derive_delta2(const RootMultiset& delta1, int chi, int r);

struct CandidateVerdict {
  bool pass = true;
  std::vector<std::string> failures;
  std::optional<RootMultiset> delta2;
  std::string first_failure() const { return failures.empty() ? "" : failures.front(); }
};

/// Throws std::invalid_argument on a d mismatch.
CandidateVerdict verify_candidate(int r, const RootMultiset& candidate, const AlexanderBounds& bounds, int chi);

class CandidateParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// Products of (t-1)^e, (t+1)^e, (t^a-1)^e, (t^a+1)^e over the d-th roots of unity.
RootMultiset parse_candidate(const std::string& text, int d);

/// Orders of roots present that are prime powers outside {2, 3, 4}.
std::vector<int> conjecture_screen(const RootMultiset& delta1);

}  // namespace arrkit
