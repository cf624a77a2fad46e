#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arrkit/multipoly.hpp"

namespace arrkit {

struct Component {
  MultiPoly poly;
  int mult = 1;
  std::string label;
  bool irreducible_asserted = false;
};

/// A member s*g1 + t*g2 of a pencil. For a non-reduced member the
/// arrangement contains its reduction `support`; when that is absent and the
/// member is (0:1) of a Halphen pencil, the reduction is h.
struct PencilMember {
  CycloNumber s;
  CycloNumber t;
  bool reduced = true;
  std::optional<MultiPoly> support;
};

struct PencilSpec {
  MultiPoly g1;
  MultiPoly g2;
  std::optional<MultiPoly> h;
  int k = 1;
  std::vector<PencilMember> members;

  bool has_halphen() const { return h.has_value() && k > 1; }
  MultiPoly member_poly(const PencilMember& m) const;
  /// The curve the member contributes to the arrangement; nullopt when a
  /// non-reduced member has no known reduction.
  std::optional<MultiPoly> member_support(const PencilMember& m) const;
};

class InvalidArrangement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A reduced plane curve given as labeled components, optionally with
/// multiplicities. Immutable once built.
class Arrangement {
 public:
  Arrangement(int order, std::vector<Component> components);

  int field_order() const { return order_; }
  const std::vector<Component>& components() const { return components_; }
  /// Degree of the reduced curve.
  int degree() const { return degree_; }
  /// Number of components.
  int count() const { return static_cast<int>(components_.size()); }
  /// Product of poly^mult.
  const MultiPoly& f() const { return f_; }
  /// Product of the component polynomials.
  const MultiPoly& f_red() const { return f_red_; }
  bool has_multiplicities() const;
  std::vector<std::string> labels() const;

  std::string name;
  std::optional<PencilSpec> pencil;
  std::vector<ProjPoint> known_points;
  std::vector<std::string> notes;

 private:
  int order_;
  std::vector<Component> components_;
  int degree_ = 0;
  MultiPoly f_;
  MultiPoly f_red_;
};

/// Components of degree 1 and smooth conics are irreducible.
bool auto_irreducible(const MultiPoly& p);

nlohmann::json to_json(const Arrangement& arr);
/// Throws ParseError on bad polynomials and InvalidArrangement on schema errors.
Arrangement arrangement_from_json(const nlohmann::json& j);
Arrangement load_arrangement(const std::string& path);

nlohmann::json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const nlohmann::json& j, int order);

}  // namespace arrkit
