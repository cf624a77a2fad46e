#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrkit/arrangement.hpp"

namespace arrkit {

/// (s:t) with the last nonzero entry scaled to 1.
using PencilParam = std::pair<CycloNumber, CycloNumber>;
PencilParam normalize_param(const CycloNumber& s, const CycloNumber& t);
std::string to_string(const PencilParam& p);

/// The (s:t) with s*g1 + t*g2 = c*p for some nonzero scalar c, if any.
std::optional<PencilParam> pencil_membership(const MultiPoly& p, const PencilSpec& pencil);

/// True iff h^k == g2. Throws when the pencil carries no h.
bool halphen_verify(const PencilSpec& pencil);

/// True iff f_red composed with g^-1 is a nonzero multiple of f_red for
/// every generator g.
bool group_invariance(const Arrangement& arr, const std::vector<Matrix3>& gens);

enum class ConicPencilType { I, II, III, IV, V, indeterminate };
std::string to_string(ConicPencilType t);

struct ConicPencilAnalysis {
  ConicPencilType type = ConicPencilType::indeterminate;
  /// Binary cubic det(s*A + t*B), in the variables x = s, y = t.
  MultiPoly discriminant;
  /// Degenerate members with the multiplicity of their parameter as a root
  /// of the cubic and the rank of the member's matrix.
  struct Degenerate {
    PencilParam param;
    int root_multiplicity;
    int rank;
  };
  std::vector<Degenerate> degenerate;
};

/// Type of the conic pencil spanned by q1 and q2, from the root pattern of
/// det(s*A + t*B) and the ranks at its roots. Throws when the cubic vanishes
/// identically.
ConicPencilAnalysis conic_pencil_analysis(const MultiPoly& q1, const MultiPoly& q2);
inline ConicPencilType conic_pencil_type(const MultiPoly& q1, const MultiPoly& q2) {
  return conic_pencil_analysis(q1, q2).type;
}

}  // namespace arrkit
