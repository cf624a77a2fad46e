#include "arrkit/syzfree.hpp"

namespace arrkit {

int tau_max(int d, int r) { return (d - 1) * (d - 1) - r * (d - 1 - r); }

namespace {

int dim_forms(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

std::vector<MultiPoly> partials(const Arrangement& arr) {
  return {arr.f_red().derivative(Var::x), arr.f_red().derivative(Var::y), arr.f_red().derivative(Var::z)};
}

/// Rows g * m for each partial g and each monomial m of degree r, written in
/// the monomials of degree r + d - 1.
MacaulaySystem jacobian_system(const Arrangement& arr, int r) {
  MacaulaySystem sys;
  sys.order = arr.field_order();
  const int d = arr.degree();
  const auto monos = monomials_of_degree(r);
  for (const auto& g : partials(arr)) {
    if (g.is_zero()) continue;
    sys.generators.push_back(g);
    for (const auto& m : monos) sys.rows.emplace_back(static_cast<int>(sys.generators.size()) - 1, m);
  }
  sys.columns = monomials_of_degree(r + d - 1);
  return sys;
}

}  // namespace

HilbertValue jacobian_hilbert_value(const Arrangement& arr, int k, const RankOptions& opt) {
  if (k < 0) return {0, true};
  const int d = arr.degree();
  const int r = k - (d - 1);
  if (r < 0) return {dim_forms(k), true};
  const MacaulaySystem sys = jacobian_system(arr, r);
  const RankResult rr = rank(sys.to_matrix(), opt);
  return {dim_forms(k) - rr.rank, rr.proven};
}

int jacobian_hilbert(const Arrangement& arr, int k, const RankOptions& opt) {
  return jacobian_hilbert_value(arr, k, opt).value;
}

std::string to_string(TjurinaMethod m) { return m == TjurinaMethod::local_sum ? "local" : "hilbert"; }

TjurinaMethod parse_tjurina_method(const std::string& s) {
  if (s == "local" || s == "local_sum") return TjurinaMethod::local_sum;
  if (s == "hilbert" || s == "hilbert_stable") return TjurinaMethod::hilbert_stable;
  throw std::invalid_argument("unknown tau method '" + s + "' (expected local or hilbert)");
}

TjurinaResult global_tjurina(const Arrangement& arr, TjurinaMethod method, const SingularLocusReport* report,
                             const TjurinaOptions& opt) {
  if (method == TjurinaMethod::local_sum) {
    if (!report || !report->complete) throw IncompleteLocus("singular locus is not certified complete");
    return {report->total_tau, true, -1};
  }
  const int d = arr.degree();
  if (d > opt.degree_guard && !opt.force)
    throw DegreeGuardExceeded("degree " + std::to_string(d) + " exceeds the Hilbert degree guard " +
                              std::to_string(opt.degree_guard));
  int run = 0, last = -1;
  bool proven = true;
  for (int k = 2 * d + 1; k <= 4 * d + 4; ++k) {
    const HilbertValue h = jacobian_hilbert_value(arr, k, opt.rank);
    proven = proven && h.proven;
    run = h.value == last ? run + 1 : 1;
    last = h.value;
    if (run == 3) return {last, proven, k - 2};
  }
  throw std::runtime_error("Hilbert function did not stabilize by degree " + std::to_string(4 * d + 4));
}

int mdr(const Arrangement& arr, const MdrOptions& opt) {
  for (const auto& g : partials(arr))
    if (g.is_zero()) return 0;
  const int d = arr.degree();
  for (int r = 0; r < d - 1; ++r) {
    const SparseMatrix m = jacobian_system(arr, r).to_matrix();
    const int unknowns = static_cast<int>(m.rows.size());
    // Full rank modulo p implies full rank over the field.
    if (modular_rank(m, 1, false).rank == unknowns) continue;
    if (rank(m, opt.confirm).rank < unknowns) return r;
  }
  return d - 1;
}

std::string FreenessVerdict::to_string() const {
  switch (kind) {
    case FreenessKind::free:
      return "free(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    case FreenessKind::nearly_free:
      return "nearly_free(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    case FreenessKind::neither:
      return "neither";
  }
  return "neither";
}

FreenessVerdict classify_freeness(int d, int r, int tau) {
  FreenessVerdict v;
  v.mdr = r;
  v.tau_used = tau;
  v.tau_max_reference = tau_max(d, r);
  if (tau == v.tau_max_reference) {
    v.kind = FreenessKind::free;
    v.d1 = r;
    v.d2 = d - 1 - r;
  } else if (tau == v.tau_max_reference - 1) {
    v.kind = FreenessKind::nearly_free;
    v.d1 = r;
    v.d2 = d - r;
  }
  return v;
}

int euler_chi(const Arrangement& arr, int total_mu) {
  const int d = arr.degree();
  return (d - 1) * (d - 2) + 1 - total_mu;
}

bool line_chi_bound_check(const Arrangement& arr, const SingularLocusReport& report) {
  const int d = arr.degree();
  for (const auto& c : arr.components())
    if (c.poly.degree() != 1) throw std::invalid_argument("line_chi_bound_check needs a line arrangement");
  if (d < 5) throw std::invalid_argument("line_chi_bound_check needs d >= 5");
  if (!report.complete) throw std::invalid_argument("line_chi_bound_check needs a complete singular locus");
  for (const auto& s : report.singularities)
    if (s.mult >= d - 1) throw std::invalid_argument("line_chi_bound_check excludes points of multiplicity >= d - 1");
  return euler_chi(arr, report.total_mu) >= d - 4;
}

}  // namespace arrkit
