#include "arrkit/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "arrkit/parser.hpp"
#include "arrkit/pencil.hpp"
#include "arrkit/roots.hpp"

namespace arrkit {

namespace {

constexpr int kQw = 3;

CycloNumber num(long v, int order = kQw) { return CycloNumber(v, order); }
CycloNumber w(long k = 1) { return CycloNumber::zeta(kQw, k); }

struct Vars {
  MultiPoly x, y, z;
  explicit Vars(int order)
      : x(MultiPoly::variable(Var::x, order)), y(MultiPoly::variable(Var::y, order)),
        z(MultiPoly::variable(Var::z, order)) {}
};

MultiPoly linear(const CycloNumber& a, const CycloNumber& b, const CycloNumber& c) {
  const Vars v(a.order());
  return v.x * a + v.y * b + v.z * c;
}

Component make_component(MultiPoly p, int mult = 1, std::string label = {}) {
  Component c;
  if (label.empty()) label = p.to_string();
  c.poly = std::move(p);
  c.mult = mult;
  c.label = std::move(label);
  c.irreducible_asserted = auto_irreducible(c.poly);
  return c;
}

long parse_int_param(const CatalogParams& params, const std::string& key, long lo, long hi) {
  const auto it = params.find(key);
  if (it == params.end()) throw CatalogError("missing parameter '" + key + "'");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) throw CatalogError("parameter '" + key + "' must be an integer");
  if (v < lo || v > hi)
    throw CatalogError("parameter '" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

CycloNumber parse_lambda(const CatalogParams& params) {
  const auto it = params.find("lambda");
  if (it == params.end()) throw CatalogError("missing parameter 'lambda'");
  try {
    return parse_cyclo(it->second, kQw);
  } catch (const ParseError& e) {
    throw CatalogError("parameter 'lambda': " + std::string(e.what()));
  }
}

void require_params(const CatalogEntry& e, const CatalogParams& params) {
  for (const auto& [k, v] : params) {
    const bool known = std::any_of(e.params.begin(), e.params.end(), [&](const auto& p) { return p.name == k; });
    if (!known) throw CatalogError("entry '" + e.name + "' has no parameter '" + k + "'");
  }
}

/// Field for the m-th roots of unity; Q(w) already holds the sixth roots.
int monomial_field(long m) { return 6 % m == 0 ? kQw : static_cast<int>(m); }

std::vector<CycloNumber> roots_of_unity(long m, int order) {
  std::vector<CycloNumber> out;
  CycloNumber base = CycloNumber::zeta(order, order / m);
  if (order == kQw && m == 2) base = num(-1);
  if (order == kQw && m == 6) base = -w(2);
  CycloNumber e = CycloNumber::one(order);
  for (long j = 0; j < m; ++j) {
    out.push_back(e);
    e *= base;
  }
  return out;
}

std::vector<PencilMember> reduced_members(const std::vector<std::pair<CycloNumber, CycloNumber>>& params) {
  std::vector<PencilMember> out;
  for (const auto& [s, t] : params) out.push_back({s, t, true, std::nullopt});
  return out;
}

Arrangement build_monomial(long m, bool full) {
  const int order = monomial_field(m);
  const Vars v(order);
  std::vector<Component> comps;
  if (full)
    for (const auto* var : {&v.x, &v.y, &v.z}) comps.push_back(make_component(*var));
  const auto eps = roots_of_unity(m, order);
  for (const auto& [a, b] : {std::pair{&v.x, &v.y}, std::pair{&v.y, &v.z}, std::pair{&v.x, &v.z}})
    for (const auto& e : eps) comps.push_back(make_component(*a - *b * e));
  Arrangement arr(order, std::move(comps));
  arr.name = (full ? "full_monomial(" : "monomial(") + std::to_string(m) + ")";
  const MultiPoly xm = v.x.pow(m), ym = v.y.pow(m), zm = v.z.pow(m);
  const CycloNumber one = CycloNumber::one(order), zero = CycloNumber::zero(order);
  if (!full) {
    arr.pencil = PencilSpec{xm - ym, ym - zm, std::nullopt, 1, reduced_members({{one, zero}, {zero, one}, {one, one}})};
  } else {
    // All three members are non-reduced and the pencil is not Halphen.
    PencilSpec p{zm * (xm - ym), xm * (ym - zm), std::nullopt, 1, {}};
    p.members.push_back({one, zero, false, v.z * (xm - ym)});
    p.members.push_back({zero, one, false, v.x * (ym - zm)});
    p.members.push_back({one, one, false, v.y * (xm - zm)});
    arr.pencil = p;
  }
  if (m >= 2) {
    for (int i = 0; i < 3; ++i) {
      std::array<long, 3> c{0, 0, 0};
      c[i] = 1;
      arr.known_points.emplace_back(c[0], c[1], c[2], order);
    }
  }
  for (const auto& a : eps)
    for (const auto& b : eps) arr.known_points.emplace_back(a, b, one);
  return arr;
}

Arrangement from_polys(std::string name, int order, const std::vector<MultiPoly>& polys) {
  std::vector<Component> comps;
  for (const auto& p : polys) comps.push_back(make_component(p));
  Arrangement arr(order, std::move(comps));
  arr.name = std::move(name);
  return arr;
}

MultiPoly P(const std::string& s) { return parse_poly(s, kQw); }

Arrangement build_prop44() {
  Arrangement arr = from_polys("typeI_prop44", kQw,
                               {P("x - y"), P("x + y"), P("y - z"), P("y + z"), P("x - z"), P("x + z"),
                                P("x^2 - 2*y^2 + z^2")});
  arr.pencil = PencilSpec{P("x^2 - y^2"), P("y^2 - z^2"), std::nullopt, 1,
                          reduced_members({{num(1), num(0)}, {num(0), num(1)}, {num(1), num(1)}, {num(1), num(-1)}})};
  return arr;
}

Arrangement build_prop45() {
  Arrangement arr = from_polys("typeI_prop45", kQw,
                               {P("y - z"), P("y + z"), P("x - z"), P("x + z"), P("x^2 - 2*y^2 + z^2")});
  arr.pencil = PencilSpec{P("x^2 - y^2"), P("y^2 - z^2"), std::nullopt, 1,
                          reduced_members({{num(0), num(1)}, {num(1), num(1)}, {num(1), num(-1)}})};
  return arr;
}

Arrangement build_prop46() {
  Arrangement arr = from_polys("typeII_prop46", kQw,
                               {P("x"), P("y"), P("x - y"), P("x + y + z"), P("x*y + x^2 - y^2 + x*z - y*z")});
  arr.pencil = PencilSpec{P("x*y"), P("(x - y)*(x + y + z)"), std::nullopt, 1,
                          reduced_members({{num(1), num(0)}, {num(0), num(1)}, {num(1), num(1)}})};
  arr.known_points.emplace_back(0, 0, 1, kQw);
  return arr;
}

Arrangement build_prop47() {
  Arrangement arr = from_polys("typeIII_prop47", kQw,
                               {P("x"), P("x - z"), P("x*y - z^2"), P("x^2 - x*z + x*y - z^2")});
  arr.pencil = PencilSpec{P("x*(x - z)"), P("x*y - z^2"), std::nullopt, 1,
                          reduced_members({{num(1), num(0)}, {num(0), num(1)}, {num(1), num(1)}})};
  return arr;
}

std::vector<MultiPoly> hesse_line_polys() {
  std::vector<MultiPoly> out{P("x"), P("y"), P("z")};
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) out.push_back(linear(num(1), w(a), w(b)));
  return out;
}

/// Splits a singular conic into its lines: one line of multiplicity 2, or two
/// distinct lines through the vertex.
std::vector<std::pair<MultiPoly, int>> split_conic(const MultiPoly& q) {
  const int order = q.field_order();
  const Matrix3 m = conic_matrix(q);
  const int rk = matrix_rank(m);
  if (rk == 3) throw std::logic_error("split_conic: smooth conic");
  if (rk == 1) {
    for (const auto& row : m)
      if (!row[0].is_zero() || !row[1].is_zero() || !row[2].is_zero())
        return {{linear(row[0], row[1], row[2]).monic(), 2}};
  }
  // Restrict to a coordinate line z_i = 0 missing the vertex, where q becomes a
  // binary quadratic with two distinct roots; join each root to the vertex.
  std::array<CycloNumber, 3> vertex;
  {
    // Kernel of a rank-2 symmetric matrix: cross product of two independent rows.
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const auto& a = m[i];
        const auto& b = m[j];
        std::array<CycloNumber, 3> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        if (!c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) {
          vertex = c;
          i = j = 3;
        }
      }
  }
  for (int k = 0; k < 3; ++k) {
    if (vertex[k].is_zero()) continue;
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    // q on z_k = 0 in the coordinates (z_a : z_b), dehomogenized at z_b = 1.
    Monomial ma, mab, mb;
    ma.e[a] = 2;
    mab.e[a] = 1;
    mab.e[b] = 1;
    mb.e[b] = 2;
    const UniPoly g({q.coefficient(mb), q.coefficient(mab), q.coefficient(ma)}, order);
    std::vector<std::array<CycloNumber, 3>> pts;
    if (g.degree() < 2) {
      std::array<CycloNumber, 3> p{CycloNumber::zero(order), CycloNumber::zero(order), CycloNumber::zero(order)};
      p[a] = CycloNumber::one(order);
      pts.push_back(p);
    }
    const RootSet rs = find_roots(g);
    if (!rs.complete()) throw std::runtime_error("split_conic: lines not defined over the field");
    for (const auto& [r, mult] : rs.roots) {
      std::array<CycloNumber, 3> p{CycloNumber::zero(order), CycloNumber::zero(order), CycloNumber::zero(order)};
      p[a] = r;
      p[b] = CycloNumber::one(order);
      pts.push_back(p);
    }
    if (pts.size() != 2) continue;
    std::vector<std::pair<MultiPoly, int>> out;
    for (const auto& p : pts) {
      const auto& v = vertex;
      out.push_back({linear(v[1] * p[2] - v[2] * p[1], v[2] * p[0] - v[0] * p[2], v[0] * p[1] - v[1] * p[0]).monic(), 1});
    }
    return out;
  }
  throw std::logic_error("split_conic: no transversal coordinate line");
}

Matrix3 mat(const std::array<std::array<CycloNumber, 3>, 3>& m) { return m; }

}  // namespace

std::array<MultiPoly, 12> hesse_conics(const CycloNumber& lam) {
  const Vars v(kQw);
  const MultiPoly &x = v.x, &y = v.y, &z = v.z;
  const MultiPoly xx = x * x, yy = y * y, zz = z * z, xy = x * y, xz = x * z, yz = y * z;
  const CycloNumber one = num(1), l1 = lam + one;
  return {
      xx + l1 * (w(1) * xy + w(2) * xz + yz) + w(2) * yy + w(1) * zz,
      xx + l1 * (w(2) * xy + w(1) * xz + yz) + w(1) * yy + w(2) * zz,
      xy - lam * zz,
      xx + (w(1) * lam + one) * (xy + w(1) * xz + w(1) * yz) + yy + w(2) * zz,
      xx + (w(2) * lam + one) * (xy + w(2) * xz + w(2) * yz) + yy + w(1) * zz,
      xx + (w(1) * lam + w(2)) * (xy + yz + w(1) * xz) + w(1) * yy + zz,
      -lam * yy + xz,
      xx + (w(2) * lam + w(1)) * (xy + yz + w(2) * xz) + w(2) * yy + zz,
      xx + (lam + w(2)) * (xy + xz + w(2) * yz) + w(1) * yy + w(1) * zz,
      xx + (lam + w(1)) * (xy + xz + w(1) * yz) + w(2) * (yy + zz),
      lam * xx - yz,
      xx + l1 * (xy + xz + yz) + yy + zz,
  };
}

std::array<ProjPoint, 9> hesse_points(const CycloNumber& lam) {
  const CycloNumber o = num(1);
  return {ProjPoint(lam, o, o),       ProjPoint(o, lam, o),       ProjPoint(o, o, lam),
          ProjPoint(lam, w(1), w(2)), ProjPoint(w(2), lam, w(1)), ProjPoint(w(1), w(2), lam),
          ProjPoint(lam, w(2), w(1)), ProjPoint(w(1), lam, w(2)), ProjPoint(w(2), w(1), lam)};
}

std::array<ProjPoint, 12> hesse_sigma12() {
  const CycloNumber o = num(1), z = num(0);
  return {ProjPoint(o, o, o),       ProjPoint(w(1), w(2), o), ProjPoint(w(2), w(1), o), ProjPoint(o, z, z),
          ProjPoint(z, o, z),       ProjPoint(w(2), o, o),    ProjPoint(o, w(2), o),    ProjPoint(w(1), o, o),
          ProjPoint(o, w(1), o),    ProjPoint(w(2), w(2), o), ProjPoint(z, z, o),       ProjPoint(w(1), w(1), o)};
}

namespace {
constexpr std::array<std::array<int, 3>, 4> kSexticConics{{{1, 2, 12}, {3, 7, 11}, {4, 8, 9}, {5, 6, 10}}};
}

MultiPoly hesse_sextic(int j, const CycloNumber& lam) {
  if (j < 1 || j > 4) throw std::invalid_argument("hesse_sextic: j must be 1..4");
  const auto q = hesse_conics(lam);
  const auto& idx = kSexticConics[j - 1];
  return q[idx[0] - 1] * q[idx[1] - 1] * q[idx[2] - 1];
}

MultiPoly hesse_s1_expanded(const CycloNumber& l) {
  const Vars v(kQw);
  const MultiPoly x3 = v.x.pow(3), y3 = v.y.pow(3), z3 = v.z.pow(3), xyz = v.x * v.y * v.z;
  const CycloNumber l2 = l * l, l3 = l2 * l;
  return v.x.pow(6) + v.y.pow(6) + v.z.pow(6) + (l3 + num(3) * l2 - num(2)) * (x3 * y3 + y3 * z3 + x3 * z3) +
         (num(-3) * l2 - num(3) * l) * (xyz * (x3 + y3 + z3)) + (num(-3) * l3 + num(9) * l + num(3)) * xyz.pow(2);
}

MultiPoly hesse_s2_expanded(const CycloNumber& l) {
  const Vars v(kQw);
  const MultiPoly x3 = v.x.pow(3), y3 = v.y.pow(3), z3 = v.z.pow(3), xyz = v.x * v.y * v.z;
  const CycloNumber l2 = l * l, l3 = l2 * l;
  return -l2 * (x3 * y3 + y3 * z3 + x3 * z3) + l * (xyz * (x3 + y3 + z3)) + (l3 - num(1)) * xyz.pow(2);
}

MultiPoly hesse_cubic(const CycloNumber& l) {
  const Vars v(kQw);
  return l * (v.x.pow(3) + v.y.pow(3) + v.z.pow(3)) - (l * l * l + num(2)) * (v.x * v.y * v.z);
}

std::vector<Matrix3> hesse_group_generators() {
  const CycloNumber o = num(1), z = num(0);
  return {mat({{{o, z, z}, {z, w(1), z}, {z, z, w(2)}}}), mat({{{z, o, z}, {o, z, z}, {z, z, o}}}),
          mat({{{z, o, z}, {z, z, o}, {o, z, z}}})};
}

std::vector<CycloNumber> hesse_special_lambdas() {
  return {num(0), num(1), w(1), w(2), num(-2), num(-2) * w(1), num(-2) * w(2)};
}

bool is_hesse_special(const CycloNumber& l) {
  const auto s = hesse_special_lambdas();
  return std::find(s.begin(), s.end(), l) != s.end();
}

std::string hesse_special_suffix(const CycloNumber& l) {
  static const std::array<const char*, 7> names{"0", "1", "w", "w2", "m2", "m2w", "m2w2"};
  const auto s = hesse_special_lambdas();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == l) return names[i];
  throw CatalogError("lambda = " + l.to_string() + " is not a special value");
}

Arrangement hesse_degeneration(HesseDegeneration kind, const CycloNumber& lam) {
  if (!is_hesse_special(lam))
    throw CatalogError("lambda = " + lam.to_string() + " is not special; use hesse_conics");
  const auto q = hesse_conics(lam);
  std::vector<Component> conics;
  std::vector<std::pair<MultiPoly, int>> lines;
  std::vector<bool> smooth(12);
  for (int j = 0; j < 12; ++j) {
    smooth[j] = conic_classify(q[j]) == ConicType::smooth;
    if (smooth[j]) {
      conics.push_back(make_component(q[j], 1, "Q" + std::to_string(j + 1)));
      continue;
    }
    for (auto& [l, m] : split_conic(q[j])) {
      auto it = std::find_if(lines.begin(), lines.end(), [&](const auto& e) { return e.first == l; });
      if (it == lines.end())
        lines.push_back({l, m});
      else
        it->second += m;
    }
  }
  std::vector<Component> comps = conics;
  MultiPoly hred = MultiPoly::constant(1, kQw);
  for (const auto& [l, m] : lines) hred *= l;
  if (kind != HesseDegeneration::B)
    for (const auto& [l, m] : lines) comps.push_back(make_component(l, kind == HesseDegeneration::C ? m : 1));

  const std::string suffix = hesse_special_suffix(lam);
  Arrangement arr(kQw, std::move(comps));
  arr.name = std::string(kind == HesseDegeneration::C ? "C" : kind == HesseDegeneration::A ? "A" : "B") + suffix;

  // Halphen pencil with g1 a sextic made of smooth conics and g2 = h^2.
  const MultiPoly h = hesse_cubic(lam);
  int g1_index = -1;
  std::vector<int> reduced;
  for (int j = 1; j <= 4; ++j) {
    const auto& idx = kSexticConics[j - 1];
    if (smooth[idx[0] - 1] && smooth[idx[1] - 1] && smooth[idx[2] - 1]) {
      reduced.push_back(j);
      if (g1_index < 0) g1_index = j;
    }
  }
  PencilSpec p{hesse_sextic(g1_index, lam), h.pow(2), h, 2, {}};
  for (int j : reduced) {
    const auto param = pencil_membership(hesse_sextic(j, lam), p);
    if (!param) throw std::logic_error("hesse_degeneration: sextic s" + std::to_string(j) + " is not in the pencil");
    p.members.push_back({param->first, param->second, true, std::nullopt});
  }
  if (kind != HesseDegeneration::B) p.members.push_back({num(0), num(1), false, hred});
  arr.pencil = p;

  std::vector<ProjPoint> cand;
  for (const auto& pt : hesse_points(lam)) cand.push_back(pt);
  for (const auto& pt : hesse_sigma12()) cand.push_back(pt);
  const MultiPoly fx = arr.f_red().derivative(Var::x), fy = arr.f_red().derivative(Var::y),
                  fz = arr.f_red().derivative(Var::z);
  for (const auto& pt : cand) {
    if (std::find(arr.known_points.begin(), arr.known_points.end(), pt) != arr.known_points.end()) continue;
    if (fx.evaluate(pt).is_zero() && fy.evaluate(pt).is_zero() && fz.evaluate(pt).is_zero())
      arr.known_points.push_back(pt);
  }
  if (lam.is_zero() && kind == HesseDegeneration::A)
    arr.notes.push_back(
        "the nine points p_j(0) carry the multiplicity-7 singularities; the text also speaks of p_j(0), j = 1..12");
  return arr;
}

Arrangement hesse_lines() {
  Arrangement arr = from_polys("hesse_lines", kQw, hesse_line_polys());
  const MultiPoly g1 = P("x^3 + y^3 + z^3"), g2 = P("x*y*z");
  arr.pencil = PencilSpec{g1, g2, std::nullopt, 1,
                          reduced_members({{num(0), num(1)}, {num(1), num(-3)}, {num(1), num(-3) * w(1)}, {num(1), num(-3) * w(2)}})};
  return arr;
}

Arrangement cremona_pullback() {
  const Vars v(kQw);
  std::vector<Component> comps;
  for (const auto* var : {&v.x, &v.y, &v.z}) comps.push_back(make_component(*var, 2));
  const std::array<MultiPoly, 3> quad{v.y * v.z, v.x * v.z, v.x * v.y};
  for (const auto& l : hesse_line_polys()) {
    if (l.size() == 1) continue;
    comps.push_back(make_component(l.compose(quad)));
  }
  Arrangement arr(kQw, std::move(comps));
  arr.name = "cremona_pullback";
  return arr;
}

namespace {

Arrangement build_hesse_conics(const CycloNumber& lam) {
  if (is_hesse_special(lam)) {
    const std::string s = hesse_special_suffix(lam);
    throw CatalogError("hesse_conics: lambda = " + lam.to_string() + " gives singular conics; use C" + s + ", A" + s +
                       " or B" + s);
  }
  const auto q = hesse_conics(lam);
  std::vector<Component> comps;
  for (int j = 0; j < 12; ++j) comps.push_back(make_component(q[j], 1, "Q" + std::to_string(j + 1)));
  Arrangement arr(kQw, std::move(comps));
  arr.name = "hesse_conics(" + lam.to_string() + ")";
  const MultiPoly h = hesse_cubic(lam);
  PencilSpec p{hesse_sextic(1, lam), h.pow(2), h, 2, {}};
  for (int j = 1; j <= 4; ++j) {
    const auto param = pencil_membership(hesse_sextic(j, lam), p);
    if (!param) throw std::logic_error("hesse_conics: s" + std::to_string(j) + " is not in the pencil");
    p.members.push_back({param->first, param->second, true, std::nullopt});
  }
  arr.pencil = p;
  for (const auto& pt : hesse_points(lam)) arr.known_points.push_back(pt);
  for (const auto& pt : hesse_sigma12()) arr.known_points.push_back(pt);
  return arr;
}

const CatalogParam kLambda{"lambda", "element of Q(w), e.g. 2 or -2*w", std::nullopt};

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"monomial", "(x^m - y^m)(y^m - z^m)(x^m - z^m), 3m lines", {{"m", "positive integer <= 12", "3"}},
                 [](const CatalogParams& p) { return build_monomial(parse_int_param(p, "m", 1, 12), false); }});
  out.push_back({"full_monomial", "xyz (x^m - y^m)(y^m - z^m)(x^m - z^m), 3m + 3 lines",
                 {{"m", "positive integer <= 12", "3"}},
                 [](const CatalogParams& p) { return build_monomial(parse_int_param(p, "m", 1, 12), true); }});
  out.push_back({"typeI_prop44", "six lines and a conic from a type I conic pencil", {},
                 [](const CatalogParams&) { return build_prop44(); }});
  out.push_back({"typeI_prop45", "four lines and a conic from a type I conic pencil", {},
                 [](const CatalogParams&) { return build_prop45(); }});
  out.push_back({"typeII_prop46", "four lines and a conic from a type II conic pencil", {},
                 [](const CatalogParams&) { return build_prop46(); }});
  out.push_back({"typeIII_prop47", "two lines and two conics from a type III conic pencil", {},
                 [](const CatalogParams&) { return build_prop47(); }});
  out.push_back({"hesse_lines", "dual Hesse arrangement of 12 lines", {}, [](const CatalogParams&) { return hesse_lines(); }});
  out.push_back({"hesse_conics", "Hesse arrangement of 12 smooth conics", {kLambda},
                 [](const CatalogParams& p) { return build_hesse_conics(parse_lambda(p)); }});
  out.push_back({"cremona_pullback", "Cremona pullback of the dual Hesse lines (3 double lines, 9 conics)", {},
                 [](const CatalogParams&) { return cremona_pullback(); }});
  const std::array<std::pair<const char*, HesseDegeneration>, 3> kinds{
      {{"C", HesseDegeneration::C}, {"A", HesseDegeneration::A}, {"B", HesseDegeneration::B}}};
  const std::array<const char*, 3> summaries{"9 conics and 3 double lines at a special lambda",
                                             "9 conics and 3 lines at a special lambda",
                                             "9 conics at a special lambda"};
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const auto kind = kinds[k].second;
    out.push_back({kinds[k].first, summaries[k], {kLambda},
                   [kind](const CatalogParams& p) { return hesse_degeneration(kind, parse_lambda(p)); }});
  }
  for (const auto& lam : hesse_special_lambdas())
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      const auto kind = kinds[k].second;
      out.push_back({kinds[k].first + hesse_special_suffix(lam),
                     std::string(summaries[k]) + " (lambda = " + lam.to_string() + ")",
                     {},
                     [kind, lam](const CatalogParams&) { return hesse_degeneration(kind, lam); }});
    }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw CatalogError("unknown catalog entry '" + name + "'");
}

Arrangement catalog_build(const std::string& name, const CatalogParams& params) {
  const CatalogEntry& e = catalog_entry(name);
  require_params(e, params);
  CatalogParams full = params;
  for (const auto& p : e.params)
    if (!full.count(p.name) && p.default_value) full[p.name] = *p.default_value;
  return e.build(full);
}

CatalogParams parse_catalog_params(const std::vector<std::string>& items) {
  CatalogParams out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string kv = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw CatalogError("parameter '" + kv + "' is not of the form key=value");
      out[kv.substr(0, eq)] = kv.substr(eq + 1);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace arrkit
