#include "arrkit/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arrkit/analysis.hpp"
#include "arrkit/catalog.hpp"
#include "arrkit/parser.hpp"
#include "arrkit/pencil.hpp"

namespace arrkit {

extern const char* const kBuiltinManifestText;

namespace {

using nlohmann::json;

constexpr int kOrder = 3;

struct Ctx {
  SuiteResult* out;
  std::string id;
  std::string source;
  void add(const std::string& name, bool pass, const std::string& expected, const std::string& actual) {
    out->checks.push_back({id, name, pass, expected, actual, source});
  }
  template <class T>
  void eq(const std::string& name, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    add(name, expected == actual, e.str(), a.str());
  }
};

std::vector<CycloNumber> lambdas_of(const json& fx) {
  std::vector<CycloNumber> out;
  for (const auto& s : fx.at("lambdas")) out.push_back(parse_cyclo(s.get<std::string>(), kOrder));
  return out;
}

MultiPoly prod(const std::vector<MultiPoly>& ps) {
  MultiPoly p = MultiPoly::constant(1, kOrder);
  for (const auto& q : ps) p *= q;
  return p;
}

void run_analyze(Ctx& c, const json& fx) {
  CatalogParams params;
  if (fx.contains("params"))
    for (const auto& [k, v] : fx.at("params").items()) params[k] = v.get<std::string>();
  const Arrangement arr = catalog_build(fx.at("catalog").get<std::string>(), params);
  const json& ex = fx.at("expect");
  AnalyzeOptions opt;
  if (ex.contains("delta")) opt.delta = ex.at("delta").get<std::string>();
  const AnalysisReport rep = analyze(arr, opt);
  const std::string none = "none";

  if (ex.contains("certified")) c.eq("certified", ex.at("certified").get<bool>(), rep.locus.complete);
  if (ex.contains("points"))
    c.eq("singular points", ex.at("points").get<int>(), static_cast<int>(rep.locus.singularities.size()));
  if (ex.contains("types")) {
    std::map<std::string, int> got;
    for (const auto& s : rep.locus.singularities) ++got[s.type.to_string()];
    for (const auto& [t, n] : ex.at("types").items()) {
      const auto it = got.find(t);
      c.eq("points of type " + t, n.get<int>(), it == got.end() ? 0 : it->second);
    }
  }
  if (ex.contains("non_quasi_homogeneous")) {
    int n = 0;
    for (const auto& s : rep.locus.singularities) n += s.quasi_homogeneous ? 0 : 1;
    c.eq("non-quasi-homogeneous points", ex.at("non_quasi_homogeneous").get<int>(), n);
  }
  if (ex.contains("mu")) c.eq("total mu", ex.at("mu").get<int>(), rep.locus.total_mu);
  if (ex.contains("tau")) c.eq("total tau", ex.at("tau").get<int>(), rep.tau.value_or(-1));
  if (ex.contains("chi")) c.eq("chi(U)", ex.at("chi").get<int>(), rep.chi.value_or(-1));
  if (ex.contains("mdr")) c.eq("mdr", ex.at("mdr").get<int>(), rep.mdr.value_or(-1));
  if (ex.contains("freeness"))
    c.eq("freeness", ex.at("freeness").get<std::string>(), rep.freeness ? rep.freeness->to_string() : none);
  if (ex.contains("not_freeness")) {
    const std::string got = rep.freeness ? rep.freeness->to_string() : none;
    c.add("freeness", got != ex.at("not_freeness").get<std::string>(), "not " + ex.at("not_freeness").get<std::string>(),
          got);
  }
  if (ex.contains("point_mu")) {
    for (const auto& pm : ex.at("point_mu")) {
      const ProjPoint pt = point_from_json(pm.at("point"), kOrder);
      int got = -1;
      for (const auto& s : rep.locus.singularities)
        if (s.point == pt) got = s.mu;
      c.eq("local mu at " + pt.to_string(), pm.at("mu").get<int>(), got);
    }
  }
  if (ex.contains("lower_by_order")) {
    for (const auto& [n, v] : ex.at("lower_by_order").items()) {
      const int order = std::stoi(n);
      int lo = -1, hi = -1;
      for (int q = 0; q < rep.d; ++q)
        if (rep.bounds.lower.order_of(q) == order) {
          lo = lo < 0 ? rep.bounds.lower[q] : std::min(lo, rep.bounds.lower[q]);
          hi = std::max(hi, rep.bounds.lower[q]);
        }
      c.add("lower bound at order " + n, lo == v.get<int>() && hi == v.get<int>(), std::to_string(v.get<int>()),
            lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi));
    }
  }
  if (ex.contains("delta")) {
    const bool pass = rep.verdict && rep.verdict->pass;
    c.add("candidate " + ex.at("delta").get<std::string>(), pass, "pass",
          rep.verdict ? (pass ? "pass" : rep.verdict->first_failure()) : "not verified");
  }
  if (ex.contains("determined"))
    c.add("bounds determined", rep.bounds.determined == ex.at("determined").get<bool>(),
          ex.at("determined").get<bool>() ? "lower = upper" : "not determined",
          "lower " + rep.bounds.lower.to_string() + ", upper " +
              (rep.bounds.upper ? rep.bounds.upper->to_string() : std::string("unavailable")));
  if (ex.contains("conjecture")) {
    std::ostringstream e, a;
    const auto want = ex.at("conjecture").get<std::vector<int>>();
    for (int n : want) e << n << ' ';
    for (int n : rep.conjecture_orders) a << n << ' ';
    c.add("conjecture screen", want == rep.conjecture_orders, e.str(), a.str());
  }
}

// Conic indices (1-based) of s_1..s_4.
constexpr int kTriples[4][3] = {{1, 2, 12}, {3, 7, 11}, {4, 8, 9}, {5, 6, 10}};

void check_sextic_identity(Ctx& c, const json& fx, int j, const CycloNumber& coeff) {
  for (const auto& lam : lambdas_of(fx)) {
    const MultiPoly lhs = hesse_sextic(j, lam);
    const MultiPoly rhs = hesse_sextic(1, lam) + coeff * hesse_sextic(2, lam);
    c.add("lambda = " + lam.to_string(), lhs == rhs, "identity holds", lhs == rhs ? "identity holds" : "differs");
  }
}

void check_halphen(Ctx& c, const json& fx) {
  for (const auto& lam : lambdas_of(fx)) {
    const Arrangement arr = catalog_build("hesse_conics", {{"lambda", lam.to_string()}});
    bool ok = arr.pencil && arr.pencil->has_halphen() && halphen_verify(*arr.pencil) &&
              *arr.pencil->h == hesse_cubic(lam) && arr.pencil->g1 == hesse_s1_expanded(lam);
    for (int j = 1; ok && j <= 4; ++j) ok = pencil_membership(hesse_sextic(j, lam), *arr.pencil).has_value();
    c.add("P(" + lam.to_string() + ")", ok, "g2 = h^2, s1..s4 members", ok ? "g2 = h^2, s1..s4 members" : "mismatch");
  }
  const Arrangement a1 = catalog_build("A1");
  const MultiPoly h1 = parse_poly("x^3+y^3+z^3-3*x*y*z", kOrder);
  const bool ok = a1.pencil && halphen_verify(*a1.pencil) && a1.pencil->h && a1.pencil->h->proportionality(h1);
  c.add("P(1)", ok, "h ~ x^3+y^3+z^3-3xyz", ok ? "h ~ x^3+y^3+z^3-3xyz" : "mismatch");
}

void check_f0(Ctx& c) {
  const CycloNumber zero = CycloNumber::zero(kOrder);
  const auto conics = hesse_conics(zero);
  const MultiPoly f0 = prod(std::vector<MultiPoly>(conics.begin(), conics.end()));
  const MultiPoly x2y2z2 = parse_poly("x^2*y^2*z^2", kOrder);
  const bool s2 = hesse_sextic(2, zero).proportionality(x2y2z2).has_value();
  c.add("s2(0) ~ x^2 y^2 z^2", s2, "proportional", s2 ? "proportional" : "not proportional");
  const MultiPoly rhs = x2y2z2 * hesse_sextic(1, zero) * hesse_sextic(3, zero) * hesse_sextic(4, zero);
  const bool ok = f0.proportionality(rhs).has_value();
  c.add("f(0) ~ x^2 y^2 z^2 s1(0) s3(0) s4(0)", ok, "proportional", ok ? "proportional" : "not proportional");
}

void check_cremona(Ctx& c) {
  const CycloNumber one = CycloNumber::one(kOrder), w = CycloNumber::zeta(kOrder), w2 = CycloNumber::zeta(kOrder, 2);
  const Matrix3 m{{{one, w, w2}, {one, w2, w}, {one, one, one}}};
  const MultiPoly pulled = cremona_pullback().f().substitute_linear(m);
  const auto conics = hesse_conics(one);
  const MultiPoly f1 = prod(std::vector<MultiPoly>(conics.begin(), conics.end()));
  const bool ok = pulled.proportionality(f1).has_value();
  c.add("f(1) ~ h' o (linear map)", ok, "proportional", ok ? "proportional" : "not proportional");
}

void check_group(Ctx& c, const json& fx) {
  const auto gens = hesse_group_generators();
  for (const auto& lam : lambdas_of(fx)) {
    const bool ok = group_invariance(catalog_build("hesse_conics", {{"lambda", lam.to_string()}}), gens);
    c.add("lambda = " + lam.to_string(), ok, "invariant", ok ? "invariant" : "not invariant");
  }
}

std::vector<int> conics_through(const std::array<MultiPoly, 12>& conics, const ProjPoint& p) {
  std::vector<int> out;
  for (int i = 0; i < 12; ++i)
    if (conics[i].evaluate(p).is_zero()) out.push_back(i);
  return out;
}

void check_incidence(Ctx& c, const json& fx) {
  for (const auto& lam : lambdas_of(fx)) {
    const auto conics = hesse_conics(lam);
    const auto pts = hesse_points(lam);
    bool points_ok = true;
    std::array<int, 12> per_conic{};
    for (const auto& p : pts) {
      const auto through = conics_through(conics, p);
      points_ok = points_ok && through.size() == 8;
      for (int i : through) ++per_conic[i];
    }
    const bool conics_ok = std::all_of(per_conic.begin(), per_conic.end(), [](int n) { return n == 6; });
    c.add("lambda = " + lam.to_string(), points_ok && conics_ok, "(9_8, 12_6)",
          std::string(points_ok ? "" : "a point not on 8 conics ") + (conics_ok ? "" : "a conic not through 6 points") +
              (points_ok && conics_ok ? "(9_8, 12_6)" : ""));
  }
}

void check_pairs(Ctx& c, const json& fx) {
  for (const auto& lam : lambdas_of(fx)) {
    const auto conics = hesse_conics(lam);
    int from9 = 0, from12 = 0;
    for (const auto& p : hesse_points(lam)) {
      const int n = static_cast<int>(conics_through(conics, p).size());
      from9 += n * (n - 1) / 2;
    }
    for (const auto& p : hesse_sigma12()) {
      const int n = static_cast<int>(conics_through(conics, p).size());
      from12 += n * (n - 1) / 2;
    }
    // Bezout: 66 pairs of conics, 4 intersections each.
    const int bezout = 4 * 66;
    std::ostringstream a;
    a << from9 + from12 << " = " << from9 << " + " << from12;
    c.add("lambda = " + lam.to_string(), from9 == 9 * 28 && from12 == 12 && from9 + from12 == bezout,
          "264 = 252 + 12", a.str());
  }
}

void check_b0_nodes(Ctx& c) {
  const Arrangement b0 = catalog_build("B0");
  const SingularLocusReport rep = singular_locus(b0);
  const auto conics = hesse_conics(CycloNumber::zero(kOrder));
  std::map<int, int> per_sextic;
  bool same_triple = true;
  int nodes = 0;
  for (const auto& s : rep.singularities) {
    if (s.type.to_string() != "A_1") continue;
    ++nodes;
    const auto through = conics_through(conics, s.point);
    int sextic = -1;
    for (int j = 0; j < 4; ++j) {
      int hits = 0;
      for (int i : through)
        for (int t : kTriples[j]) hits += (t - 1 == i) ? 1 : 0;
      if (hits == 2 && through.size() == 2) sextic = j + 1;
    }
    if (sextic < 0) same_triple = false;
    ++per_sextic[sextic];
  }
  c.eq("nodes", 9, nodes);
  c.add("each node inside one sextic", same_triple, "yes", same_triple ? "yes" : "no");
  for (int j : {1, 3, 4}) c.eq("nodes on s" + std::to_string(j) + "(0)", 3, per_sextic[j]);
}

void run_check(Ctx& c, const json& fx) {
  const std::string name = fx.at("check").get<std::string>();
  const CycloNumber one = CycloNumber::one(kOrder);
  if (name == "s3_identity")
    check_sextic_identity(c, fx, 3, CycloNumber(3, kOrder) * (one - CycloNumber::zeta(kOrder, 2)));
  else if (name == "s4_identity")
    check_sextic_identity(c, fx, 4, CycloNumber(3, kOrder) * (one - CycloNumber::zeta(kOrder)));
  else if (name == "halphen")
    check_halphen(c, fx);
  else if (name == "f0_factorization")
    check_f0(c);
  else if (name == "cremona_he2")
    check_cremona(c);
  else if (name == "g_invariance")
    check_group(c, fx);
  else if (name == "incidence_configuration")
    check_incidence(c, fx);
  else if (name == "pair_accounting")
    check_pairs(c, fx);
  else if (name == "b0_triple_nodes")
    check_b0_nodes(c);
  else
    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

bool SuiteResult::pass() const { return failures() == 0; }

int SuiteResult::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"props4", "hesse", "degenerations", "identities"};
  return names;
}

const nlohmann::json& builtin_manifest() {
  static const json j = json::parse(kBuiltinManifestText);
  return j;
}

SuiteResult run_suite(const std::string& suite, const nlohmann::json& manifest) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteResult out;
  out.suite = suite;
  for (const auto& fx : manifest.at("fixtures")) {
    if (fx.at("suite").get<std::string>() != suite) continue;
    Ctx c{&out, fx.at("id").get<std::string>(), fx.value("source", std::string())};
    try {
      const std::string kind = fx.at("kind").get<std::string>();
      if (kind == "analyze")
        run_analyze(c, fx);
      else if (kind == "check")
        run_check(c, fx);
      else
        throw std::invalid_argument("unknown fixture kind '" + kind + "'");
    } catch (const std::exception& e) {
      c.add("runs", false, "no error", e.what());
    }
  }
  return out;
}

nlohmann::json to_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"check", c.name},
                      {"pass", c.pass},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"source", c.source}});
  return {{"schema", kReportSchema},
          {"suite", r.suite},
          {"pass", r.pass()},
          {"total", r.checks.size()},
          {"failures", r.failures()},
          {"checks", checks}};
}

std::string to_text(const SuiteResult& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.name;
    if (!c.pass) out << " (expected " << c.expected << ", got " << c.actual << ")";
    out << "\n";
  }
  out << r.suite << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace arrkit
