#include "properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "arrkit/alexander.hpp"
#include "arrkit/cyclotomic.hpp"
#include "arrkit/singular.hpp"
#include "arrkit/syzfree.hpp"
#include "arrkit/univariate.hpp"

namespace arrkit::testing {

namespace {

CycloNumber small_coeff(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> a(-3, 3), b(-2, 2);
  return CycloNumber(std::vector<Rational>{Rational(a(rng)), Rational(b(rng))}, order);
}

MultiPoly var(Var v, int order = 3) { return MultiPoly::variable(v, order); }

}  // namespace

MultiPoly random_form(std::mt19937& rng, int degree, int order) {
  std::bernoulli_distribution keep(0.6);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(degree))
    if (keep(rng)) terms.push_back({m, small_coeff(rng, order)});
  MultiPoly p(std::move(terms), order);
  if (p.is_zero()) p = MultiPoly::term(Monomial(degree, 0, 0), CycloNumber::one(order));
  return p;
}

PropertyOutcome leibniz_euler(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(0, 5);
  PropertyOutcome out;
  for (int i = 0; i < count; ++i) {
    const int dp = deg(rng), dq = deg(rng);
    const MultiPoly p = random_form(rng, dp), q = random_form(rng, dq);
    ++out.cases;
    bool ok = true;
    for (Var v : kVars) ok = ok && (p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v);
    MultiPoly euler = var(Var::x) * p.derivative(Var::x) + var(Var::y) * p.derivative(Var::y) +
                      var(Var::z) * p.derivative(Var::z);
    ok = ok && euler == p * CycloNumber(dp, 3);
    if (!ok) {
      ++out.failures;
      out.details.push_back("p = " + p.to_string() + ", q = " + q.to_string());
    }
  }
  return out;
}

PropertyOutcome mu_tau_coordinate_invariance(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> expo(2, 6), small(-2, 2), idx(0, 3);
  PropertyOutcome out;
  const MultiPoly x = var(Var::x), y = var(Var::y), z = var(Var::z);
  while (out.cases < count) {
    // x^a + y^b plus a random term of order >= 2 and degree <= 6.
    const int a = expo(rng), b = expo(rng);
    MultiPoly g = x.pow(a) + y.pow(b);
    const int i = idx(rng) + 1, j = idx(rng);
    if (i + j >= 2 && i + j <= 6) g += MultiPoly::term(Monomial(i, j, 0), small_coeff(rng, 3));
    int mu0 = 0, tau0 = 0;
    try {
      mu0 = local_milnor(g);
      tau0 = local_tjurina(g);
    } catch (const NonIsolatedSingularity&) {
      ++out.skipped;
      continue;
    }
    // (x, y) -> (a11 x + a12 y + c x^2, a21 x + a22 y)
    CycloNumber m[2][2];
    for (auto& row : m)
      for (auto& e : row) e = small_coeff(rng, 3);
    if ((m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero()) {
      ++out.skipped;
      continue;
    }
    const MultiPoly u = m[0][0] * x + m[0][1] * y + small_coeff(rng, 3) * x.pow(2);
    const MultiPoly v = m[1][0] * x + m[1][1] * y;
    const MultiPoly h = g.compose({u, v, z});
    ++out.cases;
    int mu1 = -1, tau1 = -1;
    try {
      mu1 = local_milnor(h);
      tau1 = local_tjurina(h);
    } catch (const std::exception& e) {
      out.details.push_back(g.to_string() + ": " + e.what());
    }
    if (mu1 != mu0 || tau1 != tau0) {
      ++out.failures;
      out.details.push_back(g.to_string() + ": (" + std::to_string(mu0) + "," + std::to_string(tau0) + ") vs (" +
                            std::to_string(mu1) + "," + std::to_string(tau1) + ")");
    }
  }
  return out;
}

namespace {

UniPoly int_poly(const std::vector<long>& c) {
  std::vector<CycloNumber> cs;
  for (long v : c) cs.emplace_back(v, 1);
  return UniPoly(cs, 1);
}

UniPoly from_integers(const std::vector<Integer>& c) {
  std::vector<CycloNumber> cs;
  for (const auto& v : c) cs.emplace_back(Rational(v), 1);
  return UniPoly(cs, 1);
}

/// t^n - s
UniPoly binomial(int n, long s) {
  std::vector<long> c(n + 1, 0);
  c[0] = -s;
  c[n] = 1;
  return int_poly(c);
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  UniPoly q(1), r(1);
  UniPoly::divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact division");
  return q;
}

/// Compares the multiplicity of every primitive k-th root with the power of
/// Phi_k dividing p.
bool matches(const UniPoly& p, const AbstractRoots& roots, std::string& why) {
  std::map<std::pair<int, int>, int> want;
  UniPoly rest = p;
  for (int k = 1; rest.degree() > 0 && k <= 4 * (p.degree() + 2); ++k) {
    const UniPoly phi = from_integers(cyclotomic_polynomial(k));
    int e = 0;
    for (;;) {
      UniPoly q(1), r(1);
      UniPoly::divmod(rest, phi, q, r);
      if (!r.is_zero()) break;
      rest = q;
      ++e;
    }
    if (e == 0) continue;
    for (int r = 0; r < k; ++r)
      if (std::gcd(r, k) == 1) want[{k == 1 ? 0 : r, k}] = e;
  }
  if (rest.degree() > 0) {
    why = "oracle polynomial has a non-cyclotomic factor";
    return false;
  }
  std::map<std::pair<int, int>, int> got;
  for (const auto& [key, m] : roots.entries())
    if (m != 0) got[key] = m;
  if (got != want) {
    why = "multiplicities differ";
    return false;
  }
  return true;
}

}  // namespace

PropertyOutcome local_alexander_oracle(int max) {
  PropertyOutcome out;
  for (int n = 1; n <= max; ++n) {
    const long sign = (n + 1) % 2 == 0 ? 1 : -1;
    const UniPoly p = exact_quotient(binomial(n + 1, sign), int_poly({1, 1}));
    std::string why;
    ++out.cases;
    if (!matches(p, local_alexander({SingularityKind::A, n}), why)) {
      ++out.failures;
      out.details.push_back("A_" + std::to_string(n) + ": " + why);
    }
  }
  for (int m = 2; m <= max; ++m) {
    UniPoly p = int_poly({-1, 1});
    for (int i = 0; i < m - 2; ++i) p = p * binomial(m, 1);
    std::string why;
    ++out.cases;
    if (!matches(p, local_alexander({SingularityKind::ordinary, m}), why)) {
      ++out.failures;
      out.details.push_back("ordinary_" + std::to_string(m) + ": " + why);
    }
  }
  return out;
}

PropertyOutcome line_chi_bound(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nlines(5, 8), coef(-3, 3);
  PropertyOutcome out;
  while (out.cases < count) {
    const int n = nlines(rng);
    std::vector<Component> comps;
    std::vector<MultiPoly> seen;
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i) {
      const MultiPoly l(std::vector<Term>{{Monomial(1, 0, 0), CycloNumber(coef(rng), 3)},
                                          {Monomial(0, 1, 0), CycloNumber(coef(rng), 3)},
                                          {Monomial(0, 0, 1), CycloNumber(coef(rng), 3)}},
                        3);
      if (l.is_zero()) {
        bad = true;
        break;
      }
      for (const auto& s : seen) bad = bad || l.proportionality(s).has_value();
      seen.push_back(l);
      comps.push_back({l, 1, "L" + std::to_string(i + 1), true});
    }
    if (bad) {
      ++out.skipped;
      continue;
    }
    const Arrangement arr(3, comps);
    const SingularLocusReport rep = singular_locus(arr);
    try {
      const bool ok = line_chi_bound_check(arr, rep);
      ++out.cases;
      if (!ok) {
        ++out.failures;
        out.details.push_back(arr.f_red().to_string());
      }
    } catch (const std::invalid_argument&) {
      ++out.skipped;
    }
  }
  return out;
}

}  // namespace arrkit::testing
