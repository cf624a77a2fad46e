#include "arrkit/arrangement.hpp"

#include <fstream>

#include "arrkit/parser.hpp"

namespace arrkit {

MultiPoly PencilSpec::member_poly(const PencilMember& m) const { return g1 * m.s + g2 * m.t; }

std::optional<MultiPoly> PencilSpec::member_support(const PencilMember& m) const {
  if (m.reduced) return member_poly(m);
  if (m.support) return m.support;
  if (has_halphen() && m.s.is_zero()) return h;
  return std::nullopt;
}

bool auto_irreducible(const MultiPoly& p) {
  if (p.degree() == 1) return true;
  if (p.degree() == 2 && p.is_homogeneous()) return conic_classify(p) == ConicType::smooth;
  return false;
}

Arrangement::Arrangement(int order, std::vector<Component> components)
    : order_(order), components_(std::move(components)), f_(MultiPoly::constant(1, order)),
      f_red_(MultiPoly::constant(1, order)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.poly.field_order() != order_)
      throw InvalidArrangement("component " + c.label + " is over a different field");
    if (c.poly.degree() < 1 || !c.poly.is_homogeneous())
      throw InvalidArrangement("component " + c.label + " is not homogeneous of positive degree");
    if (c.mult < 1) throw InvalidArrangement("component " + c.label + " has multiplicity < 1");
    for (std::size_t j = 0; j < i; ++j)
      if (c.poly.proportionality(components_[j].poly))
        throw InvalidArrangement("components " + components_[j].label + " and " + c.label + " are proportional");
    degree_ += c.poly.degree();
    f_red_ *= c.poly;
    f_ *= c.mult == 1 ? c.poly : c.poly.pow(c.mult);
  }
}

bool Arrangement::has_multiplicities() const {
  for (const auto& c : components_)
    if (c.mult != 1) return true;
  return false;
}

std::vector<std::string> Arrangement::labels() const {
  std::vector<std::string> out;
  for (const auto& c : components_) out.push_back(c.label);
  return out;
}

nlohmann::json point_to_json(const ProjPoint& p) {
  return nlohmann::json::array({p[0].to_string(), p[1].to_string(), p[2].to_string()});
}

ProjPoint point_from_json(const nlohmann::json& j, int order) {
  if (!j.is_array() || j.size() != 3) throw InvalidArrangement("a point needs three coordinates");
  std::array<CycloNumber, 3> c;
  for (int i = 0; i < 3; ++i) {
    if (j[i].is_string())
      c[i] = parse_cyclo(j[i].get<std::string>(), order);
    else if (j[i].is_number_integer())
      c[i] = CycloNumber(j[i].get<long>(), order);
    else
      throw InvalidArrangement("point coordinates must be strings or integers");
  }
  return ProjPoint(c[0], c[1], c[2]);
}

nlohmann::json to_json(const Arrangement& arr) {
  nlohmann::json j;
  j["field_order"] = arr.field_order();
  if (!arr.name.empty()) j["name"] = arr.name;
  j["components"] = nlohmann::json::array();
  for (const auto& c : arr.components()) {
    nlohmann::json cj{{"poly", c.poly.to_string()}, {"mult", c.mult}, {"label", c.label}};
    if (c.irreducible_asserted && !auto_irreducible(c.poly)) cj["irreducible"] = true;
    j["components"].push_back(cj);
  }
  if (arr.pencil) {
    const auto& p = *arr.pencil;
    nlohmann::json pj{{"g1", p.g1.to_string()}, {"g2", p.g2.to_string()}};
    if (p.h) {
      pj["h"] = p.h->to_string();
      pj["k"] = p.k;
    }
    pj["members"] = nlohmann::json::array();
    for (const auto& m : p.members) {
      nlohmann::json mj{{"s", m.s.to_string()}, {"t", m.t.to_string()}, {"reduced", m.reduced}};
      if (m.support) mj["support"] = m.support->to_string();
      pj["members"].push_back(mj);
    }
    j["pencil"] = pj;
  }
  if (!arr.known_points.empty()) {
    j["known_points"] = nlohmann::json::array();
    for (const auto& p : arr.known_points) j["known_points"].push_back(point_to_json(p));
  }
  if (!arr.notes.empty()) j["notes"] = arr.notes;
  return j;
}

namespace {

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArrangement(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw InvalidArrangement(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Arrangement arrangement_from_json(const nlohmann::json& j) {
  const auto& order_j = require(j, "field_order");
  if (!order_j.is_number_integer() || order_j.get<int>() < 1) throw InvalidArrangement("field_order must be >= 1");
  const int order = order_j.get<int>();
  const auto& comps = require(j, "components");
  if (!comps.is_array() || comps.empty()) throw InvalidArrangement("components must be a nonempty array");
  std::vector<Component> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& cj = comps[i];
    Component c;
    c.poly = parse_poly(require_string(cj, "poly"), order);
    c.mult = cj.value("mult", 1);
    c.label = cj.contains("label") ? cj.at("label").get<std::string>() : "C" + std::to_string(i + 1);
    c.irreducible_asserted = cj.value("irreducible", false) || auto_irreducible(c.poly);
    components.push_back(std::move(c));
  }
  Arrangement arr(order, std::move(components));
  arr.name = j.value("name", "");
  if (j.contains("pencil")) {
    const auto& pj = j.at("pencil");
    PencilSpec p{parse_poly(require_string(pj, "g1"), order), parse_poly(require_string(pj, "g2"), order),
                 std::nullopt, 1, {}};
    if (pj.contains("h")) {
      p.h = parse_poly(require_string(pj, "h"), order);
      p.k = pj.value("k", 1);
    }
    if (pj.contains("members")) {
      for (const auto& mj : pj.at("members")) {
        PencilMember m{parse_cyclo(require_string(mj, "s"), order), parse_cyclo(require_string(mj, "t"), order),
                       mj.value("reduced", true), std::nullopt};
        if (mj.contains("support")) m.support = parse_poly(require_string(mj, "support"), order);
        p.members.push_back(m);
      }
    }
    arr.pencil = std::move(p);
  }
  if (j.contains("known_points"))
    for (const auto& pt : j.at("known_points")) arr.known_points.push_back(point_from_json(pt, order));
  if (j.contains("notes")) arr.notes = j.at("notes").get<std::vector<std::string>>();
  return arr;
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

}  // namespace arrkit
