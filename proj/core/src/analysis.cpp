#include "arrkit/analysis.hpp"

#include <chrono>
#include <sstream>

namespace arrkit {

int AnalysisReport::exit_code() const {
  if (!bounds.consistent) return kExitInfeasible;
  if (verdict && !verdict->pass) return kExitInfeasible;
  if (!locus.complete && !(tau_method == "hilbert" && tau_proven)) return kExitUncertified;
  return kExitOk;
}

AnalysisReport analyze(const Arrangement& arr, const AnalyzeOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.name = arr.name;
  rep.field_order = arr.field_order();
  rep.d = arr.degree();
  rep.r = arr.count();
  rep.labels = arr.labels();
  rep.multiarrangement = arr.has_multiplicities();
  if (rep.multiarrangement) rep.warnings.push_back("multiplicities ignored: invariants refer to the reduced curve");

  if (opt.tau_method == TjurinaMethod::hilbert_stable && rep.d > opt.tjurina.degree_guard && !opt.tjurina.force)
    throw DegreeGuardExceeded("degree " + std::to_string(rep.d) + " exceeds the Hilbert degree guard " +
                              std::to_string(opt.tjurina.degree_guard) + "; pass --force to run anyway");

  rep.locus = singular_locus(arr, opt.extra_points, opt.singular);
  for (const auto& u : rep.locus.unresolved) rep.warnings.push_back("unresolved intersection locus: " + u);

  rep.tau_method = to_string(opt.tau_method);
  if (opt.tau_method == TjurinaMethod::hilbert_stable) {
    const TjurinaResult t = global_tjurina(arr, opt.tau_method, nullptr, opt.tjurina);
    rep.tau = t.tau;
    rep.tau_proven = t.proven;
    if (rep.locus.complete && t.tau != rep.locus.total_tau)
      rep.warnings.push_back("Hilbert value " + std::to_string(t.tau) + " differs from the local sum " +
                             std::to_string(rep.locus.total_tau));
  } else if (rep.locus.complete) {
    rep.tau = rep.locus.total_tau;
    rep.tau_proven = true;
  } else {
    rep.warnings.push_back("singular locus not certified complete; tau and mu are lower bounds");
  }

  rep.mdr = rep.locus.mdr ? *rep.locus.mdr : mdr(arr);
  if (rep.tau) rep.freeness = classify_freeness(rep.d, *rep.mdr, *rep.tau);
  if (rep.locus.complete) rep.chi = euler_chi(arr, rep.locus.total_mu);

  rep.pencil = pencil_structure(arr, &rep.pencil_note);
  rep.bounds = alexander_bounds(arr, rep.locus);
  if (!rep.bounds.consistent) rep.warnings.push_back("lower bound exceeds upper bound");

  if (opt.delta) {
    rep.candidate_text = *opt.delta;
    rep.candidate = parse_candidate(*opt.delta, rep.d);
    rep.conjecture_orders = conjecture_screen(*rep.candidate);
    if (rep.chi)
      rep.verdict = verify_candidate(rep.r, *rep.candidate, rep.bounds, *rep.chi);
    else
      rep.warnings.push_back("candidate not verified: chi(U) needs a complete singular locus");
  }
  if (opt.timing)
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

nlohmann::json to_json(const RootMultiset& m) {
  nlohmann::json j;
  j["d"] = m.d();
  j["mult"] = m.values();
  j["factored"] = m.to_string();
  return j;
}

nlohmann::json to_json(const AnalysisReport& rep) {
  using nlohmann::json;
  json j;
  j["schema"] = kReportSchema;
  j["arrangement"] = {{"name", rep.name},   {"field_order", rep.field_order},       {"d", rep.d},
                      {"r", rep.r},         {"labels", rep.labels}, {"multiarrangement", rep.multiarrangement}};
  json pts = json::array();
  for (const auto& s : rep.locus.singularities)
    pts.push_back({{"point", point_to_json(s.point)},
                   {"mult", s.mult},
                   {"mu", s.mu},
                   {"tau", s.tau},
                   {"ordinary", s.ordinary},
                   {"quasi_homogeneous", s.quasi_homogeneous},
                   {"type", s.type.to_string()}});
  j["singular_locus"] = {{"points", pts},
                         {"count", rep.locus.singularities.size()},
                         {"total_mu", rep.locus.total_mu},
                         {"total_tau", rep.locus.total_tau},
                         {"complete", rep.locus.complete},
                         {"certification", to_string(rep.locus.certification)},
                         {"unresolved", rep.locus.unresolved}};
  j["tau"] = rep.tau ? json(*rep.tau) : json(nullptr);
  j["tau_method"] = rep.tau_method;
  j["tau_proven"] = rep.tau_proven;
  j["mdr"] = rep.mdr ? json(*rep.mdr) : json(nullptr);
  if (rep.freeness) {
    const auto& f = *rep.freeness;
    j["freeness"] = {{"verdict", f.to_string()},
                     {"mdr", f.mdr},
                     {"tau_used", f.tau_used},
                     {"tau_max_reference", f.tau_max_reference}};
    if (f.kind != FreenessKind::neither) j["freeness"]["exponents"] = {f.d1, f.d2};
  } else {
    j["freeness"] = nullptr;
  }
  j["chi"] = rep.chi ? json(*rep.chi) : json(nullptr);
  j["pencil"] = rep.pencil ? json(rep.pencil->to_string()) : json(nullptr);
  if (!rep.pencil && !rep.pencil_note.empty()) j["pencil_note"] = rep.pencil_note;
  json b;
  b["lower"] = to_json(rep.bounds.lower);
  b["lower_sources"] = rep.bounds.lower_sources;
  b["upper"] = rep.bounds.upper ? to_json(*rep.bounds.upper) : json(nullptr);
  b["upper_components"] = rep.bounds.upper_components;
  b["skipped_components"] = rep.bounds.skipped_components;
  b["exact_at"] = rep.bounds.exact_at;
  b["determined"] = rep.bounds.determined;
  b["consistent"] = rep.bounds.consistent;
  j["alexander"] = b;
  if (rep.candidate) {
    json c;
    c["input"] = *rep.candidate_text;
    c["roots"] = to_json(*rep.candidate);
    if (rep.verdict) {
      c["pass"] = rep.verdict->pass;
      c["failures"] = rep.verdict->failures;
      c["delta2"] = rep.verdict->delta2 ? to_json(*rep.verdict->delta2) : json(nullptr);
    } else {
      c["pass"] = nullptr;
    }
    c["conjecture_screen"] = rep.conjecture_orders;
    j["candidate"] = c;
  }
  j["warnings"] = rep.warnings;
  if (rep.seconds) j["timing_seconds"] = *rep.seconds;
  j["exit_code"] = rep.exit_code();
  return j;
}

std::string to_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "arrangement " << (rep.name.empty() ? "(unnamed)" : rep.name) << ": d=" << rep.d << " r=" << rep.r
      << " over Q(zeta_" << rep.field_order << ")\n";
  out << "singular points: " << rep.locus.singularities.size() << (rep.locus.complete ? " (complete, " : " (uncertified, ")
      << to_string(rep.locus.certification) << ")\n";
  for (const auto& s : rep.locus.singularities)
    out << "  " << s.point.to_string() << "  mult=" << s.mult << " mu=" << s.mu << " tau=" << s.tau << " "
        << s.type.to_string() << (s.quasi_homogeneous ? "" : " (not quasi-homogeneous)") << "\n";
  out << "total mu=" << rep.locus.total_mu << " tau=" << rep.locus.total_tau << "\n";
  if (rep.tau) out << "global tau=" << *rep.tau << " via " << rep.tau_method << (rep.tau_proven ? "" : " (unproven)") << "\n";
  if (rep.mdr) out << "mdr=" << *rep.mdr << "\n";
  if (rep.freeness) out << "freeness: " << rep.freeness->to_string() << "\n";
  if (rep.chi) out << "chi(U)=" << *rep.chi << "\n";
  out << "pencil: " << (rep.pencil ? rep.pencil->to_string() : "none (" + rep.pencil_note + ")") << "\n";
  out << "Delta^1 lower bound: " << rep.bounds.lower.to_string() << "\n";
  out << "Delta^1 upper bound: " << (rep.bounds.upper ? rep.bounds.upper->to_string() : "unavailable") << "\n";
  if (rep.bounds.determined) out << "Delta^1 determined by the bounds\n";
  if (rep.candidate) {
    out << "candidate " << *rep.candidate_text << ": ";
    if (rep.verdict)
      out << (rep.verdict->pass ? "pass" : "fail: " + rep.verdict->first_failure());
    else
      out << "not verified";
    out << "\n";
    if (!rep.conjecture_orders.empty()) {
      out << "prime-power root orders outside {2,3,4}:";
      for (int n : rep.conjecture_orders) out << ' ' << n;
      out << "\n";
    }
  }
  for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
  if (rep.seconds) out << "time: " << *rep.seconds << " s\n";
  return out.str();
}

}  // namespace arrkit
