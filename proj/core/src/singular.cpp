#include "arrkit/singular.hpp"

#include <algorithm>
#include <cmath>

#include "arrkit/roots.hpp"
#include "arrkit/syzfree.hpp"

namespace arrkit {

std::string TypeTag::to_string() const {
  switch (kind) {
    case SingularityKind::A:
      return "A_" + std::to_string(n);
    case SingularityKind::ordinary:
      return "ordinary_" + std::to_string(n);
    case SingularityKind::other:
      return "other";
  }
  return "other";
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::none:
      return "none";
    case Certification::tau_max:
      return "tau_max";
    case Certification::hilbert:
      return "hilbert";
  }
  return "none";
}

bool verify_singular(const Arrangement& arr, const ProjPoint& pt) {
  for (Var v : kVars)
    if (!arr.f_red().derivative(v).evaluate(pt).is_zero()) return false;
  return true;
}

int multiplicity_at(const Arrangement& arr, const ProjPoint& pt) {
  if (!arr.f_red().evaluate(pt).is_zero()) throw std::invalid_argument("point " + pt.to_string() + " is not on the curve");
  return localize_at(arr.f_red(), pt).low_degree();
}

namespace {

std::vector<Monomial> local_monomials_below(int n) {
  std::vector<Monomial> out;
  for (int k = 0; k < n; ++k)
    for (const auto& m : binary_monomials_of_degree(k)) out.push_back(m);
  return out;
}

int truncated_quotient_dim(const std::vector<MultiPoly>& gens, int n, const RankOptions& ropt) {
  if (n <= 0) return 0;
  const int order = gens.front().field_order();
  MacaulaySystem sys;
  sys.order = order;
  sys.columns = local_monomials_below(n);
  sys.truncate_below = n;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].is_zero()) continue;
    sys.generators.push_back(gens[g]);
    const int idx = static_cast<int>(sys.generators.size()) - 1;
    const int low = gens[g].low_degree();
    for (int k = 0; k + low < n; ++k)
      for (const auto& m : binary_monomials_of_degree(k)) sys.rows.emplace_back(idx, m);
  }
  if (sys.rows.empty()) return static_cast<int>(sys.columns.size());
  return static_cast<int>(sys.columns.size()) - rank(sys.to_matrix(), ropt).rank;
}

std::vector<MultiPoly> milnor_gens(const MultiPoly& g) { return {g.derivative(Var::x), g.derivative(Var::y)}; }
std::vector<MultiPoly> tjurina_gens(const MultiPoly& g) {
  return {g, g.derivative(Var::x), g.derivative(Var::y)};
}

/// Once dim(N) == dim(N+1), m^N lies in I + m^(N+1) and Nakayama gives
/// m^N in I, so dim(N) is the length of the local algebra.
int stable_dimension(const MultiPoly& g, const std::vector<MultiPoly>& gens, const LocalOptions& opt) {
  const int deg = g.degree();
  const int cap = std::max(1, (deg - 1) * (deg - 1));
  const int n_max = cap + 2;
  int n = std::max(1, g.low_degree());
  for (;;) {
    const int a = truncated_quotient_dim(gens, n, opt.rank);
    if (a > cap) throw NonIsolatedSingularity("local algebra dimension exceeds (deg-1)^2; singularity is not isolated");
    const int b = truncated_quotient_dim(gens, n + 1, opt.rank);
    if (a == b) return a;
    if (b > cap) throw NonIsolatedSingularity("local algebra dimension exceeds (deg-1)^2; singularity is not isolated");
    if (n + 1 >= n_max) throw NonIsolatedSingularity("truncation order exceeds (deg-1)^2 + 2");
    n = std::min(n_max - 1, std::max(n + 2, static_cast<int>(std::ceil(n * 1.25))));
  }
}

}  // namespace

int local_milnor_truncated(const MultiPoly& g, int n, const LocalOptions& opt) {
  return truncated_quotient_dim(milnor_gens(g), n, opt.rank);
}

int local_tjurina_truncated(const MultiPoly& g, int n, const LocalOptions& opt) {
  return truncated_quotient_dim(tjurina_gens(g), n, opt.rank);
}

int local_milnor(const MultiPoly& g, const LocalOptions& opt) {
  if (g.is_zero()) throw NonIsolatedSingularity("zero local equation");
  return stable_dimension(g, milnor_gens(g), opt);
}

int local_tjurina(const MultiPoly& g, const LocalOptions& opt) {
  if (g.is_zero()) throw NonIsolatedSingularity("zero local equation");
  return stable_dimension(g, tjurina_gens(g), opt);
}

bool is_ordinary(const MultiPoly& g, int mult) {
  if (mult <= 1) return true;
  const MultiPoly cone = g.homogeneous_part(mult);
  const MultiPoly cx = cone.derivative(Var::x), cy = cone.derivative(Var::y);
  if (cx.is_zero() || cy.is_zero()) return false;
  return binary_gcd({cx, Var::x, Var::y}, {cy, Var::x, Var::y}).poly.degree() == 0;
}

TypeTag classify_type(const LocalSingularity& s) {
  if (s.mult == 2) return {SingularityKind::A, s.mu};
  if (s.ordinary) return {SingularityKind::ordinary, s.mult};
  return {SingularityKind::other, 0};
}

LocalSingularity analyze_point(const Arrangement& arr, const ProjPoint& pt, const LocalOptions& opt) {
  LocalSingularity s{pt, localize_at(arr.f_red(), pt), 0, 0, 0, false, false, {}};
  s.mult = s.local_eq.low_degree();
  s.mu = local_milnor(s.local_eq, opt);
  s.tau = local_tjurina(s.local_eq, opt);
  s.ordinary = is_ordinary(s.local_eq, s.mult);
  s.quasi_homogeneous = s.mu == s.tau;
  s.type = classify_type(s);
  return s;
}

namespace {

/// Roots (a:b) of a binary form in x, y.
std::pair<std::vector<std::pair<CycloNumber, CycloNumber>>, bool> binary_roots(const MultiPoly& r) {
  const int order = r.field_order();
  const int deg = r.degree();
  std::vector<CycloNumber> coeffs(deg + 1, CycloNumber::zero(order));
  for (const auto& t : r.terms()) coeffs[t.mono.e[0]] += t.coeff;
  const UniPoly u(coeffs, order);
  std::vector<std::pair<CycloNumber, CycloNumber>> out;
  int found = 0;
  if (u.degree() < deg) {
    out.push_back({CycloNumber::one(order), CycloNumber::zero(order)});
    found += deg - u.degree();
  }
  if (u.degree() > 0) {
    const RootSet rs = find_roots(u);
    for (const auto& [root, m] : rs.roots) {
      out.push_back({root, CycloNumber::one(order)});
      found += m;
    }
  }
  return {out, found == deg};
}

std::array<CycloNumber, 3> cross(const std::array<CycloNumber, 3>& a, const std::array<CycloNumber, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<CycloNumber, 3> linear_coeffs(const MultiPoly& l) {
  return {l.coefficient({1, 0, 0}), l.coefficient({0, 1, 0}), l.coefficient({0, 0, 1})};
}

UniPoly restrict_to_fiber(const MultiPoly& p, const CycloNumber& a, const CycloNumber& b) {
  const int order = p.field_order();
  const MultiPoly q = p.compose({MultiPoly::constant(a), MultiPoly::constant(b), MultiPoly::variable(Var::z, order)});
  const auto cs = q.coefficients_in(Var::z);
  std::vector<CycloNumber> coeffs;
  for (const auto& c : cs) coeffs.push_back(c.is_zero() ? CycloNumber::zero(order) : c.leading_coefficient());
  return UniPoly(coeffs, order);
}

}  // namespace

IntersectionResult intersect_curves(const MultiPoly& p, const MultiPoly& q) {
  const int order = p.field_order();
  IntersectionResult out;
  if (p.degree() == 1 && q.degree() == 1) {
    const auto c = cross(linear_coeffs(p), linear_coeffs(q));
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
      out.complete = false;
      return out;
    }
    out.points.emplace_back(c[0], c[1], c[2]);
    return out;
  }
  // Project from a center (a:b:1) off both curves, after which the resultant in
  // z is a binary form whose roots are the images of the intersection points.
  static const std::array<std::pair<long, long>, 8> centers{
      {{0, 0}, {1, 2}, {2, -1}, {-3, 1}, {1, 5}, {7, -2}, {-4, -9}, {11, 3}}};
  for (const auto& [ca, cb] : centers) {
    const CycloNumber a(ca, order), b(cb, order), one = CycloNumber::one(order), zero = CycloNumber::zero(order);
    const ProjPoint center(a, b, one);
    if (p.evaluate(center).is_zero() || q.evaluate(center).is_zero()) continue;
    const Matrix3 m{{{one, zero, a}, {zero, one, b}, {zero, zero, one}}};
    const MultiPoly pp = p.substitute_linear(m), qq = q.substitute_linear(m);
    const MultiPoly r = resultant(pp, qq, Var::z);
    if (r.is_zero()) {
      out.complete = false;
      return out;
    }
    if (r.degree() == 0) return out;
    const auto [fibers, all] = binary_roots(r);
    out.complete = all;
    for (const auto& [s, t] : fibers) {
      const UniPoly g = gcd(restrict_to_fiber(pp, s, t), restrict_to_fiber(qq, s, t));
      if (g.degree() <= 0) continue;
      const RootSet rs = find_roots(g);
      if (!rs.complete()) out.complete = false;
      for (const auto& [c, mult] : rs.roots) {
        const ProjPoint v(s, t, c);
        out.points.push_back(v.transformed(m));
      }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
  }
  out.complete = false;
  return out;
}

DiscoveryResult discover_points(const Arrangement& arr) {
  DiscoveryResult out;
  const auto& comps = arr.components();
  auto add = [&](const IntersectionResult& r, const std::string& what) {
    for (const auto& pt : r.points) out.points.push_back(pt);
    if (!r.complete) out.unresolved.push_back(what);
  };
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      add(intersect_curves(comps[i].poly, comps[j].poly), comps[i].label + " x " + comps[j].label);
  for (const auto& c : comps) {
    if (c.poly.degree() < 2 || auto_irreducible(c.poly)) continue;
    const std::array<MultiPoly, 3> d{c.poly.derivative(Var::x), c.poly.derivative(Var::y), c.poly.derivative(Var::z)};
    IntersectionResult best;
    best.complete = false;
    for (int a = 0; a < 3 && !best.complete; ++a)
      for (int b = a + 1; b < 3 && !best.complete; ++b) {
        if (d[a].is_zero() || d[b].is_zero()) continue;
        best = intersect_curves(d[a], d[b]);
      }
    add(best, "singular points of " + c.label);
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

SingularLocusReport singular_locus(const Arrangement& arr, const std::vector<ProjPoint>& extra,
                                   const SingularOptions& opt) {
  std::vector<ProjPoint> cand = arr.known_points;
  cand.insert(cand.end(), extra.begin(), extra.end());
  SingularLocusReport rep;
  if (opt.discover) {
    DiscoveryResult d = discover_points(arr);
    cand.insert(cand.end(), d.points.begin(), d.points.end());
    rep.unresolved = std::move(d.unresolved);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& pt : cand) {
    if (pt.field_order() != arr.field_order()) throw FieldMismatch("candidate point over a different field");
    if (!verify_singular(arr, pt)) continue;
    rep.singularities.push_back(analyze_point(arr, pt, opt.local));
    rep.total_mu += rep.singularities.back().mu;
    rep.total_tau += rep.singularities.back().tau;
  }
  if (!opt.certify) return rep;

  const int d = arr.degree();
  const int r = mdr(arr);
  rep.mdr = r;
  if (2 * r <= d - 1 && rep.total_tau == tau_max(d, r)) {
    rep.complete = true;
    rep.certification = Certification::tau_max;
    return rep;
  }
  if (d > opt.hilbert_certify_limit) return rep;
  // For k >= 2d - 4 the Hilbert function of the Milnor algebra is at least the
  // global Tjurina number, and a rank modulo p can only overestimate it.
  std::vector<int> degrees{std::max(0, 2 * d - 4), 3 * d - 6, 3 * d - 5};
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int k : degrees) {
    if (k < 0) continue;
    const int h = jacobian_hilbert(arr, k, RankOptions{RankMethod::modular, 1, 0});
    if (h == rep.total_tau) {
      rep.complete = true;
      rep.certification = Certification::hilbert;
      return rep;
    }
  }
  return rep;
}

}  // namespace arrkit
