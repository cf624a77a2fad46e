#include "arrkit/alexander.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "arrkit/pencil.hpp"

namespace arrkit {

RootMultiset::RootMultiset(int d) : m_(d, 0) {
  if (d < 1) throw std::invalid_argument("RootMultiset needs d >= 1");
}

int RootMultiset::order_of(int q) const { return d() / std::gcd(q, d()); }

int RootMultiset::degree() const { return std::accumulate(m_.begin(), m_.end(), 0); }

void RootMultiset::raise_order(int n, int v) {
  if (d() % n != 0) throw std::invalid_argument("order " + std::to_string(n) + " does not divide d = " + std::to_string(d()));
  for (int q = 0; q < d(); ++q)
    if (order_of(q) == n) m_[q] = std::max(m_[q], v);
}

void RootMultiset::check(const RootMultiset& o) const {
  if (o.d() != d()) throw std::invalid_argument("root multisets over different d");
}

RootMultiset& RootMultiset::operator+=(const RootMultiset& o) {
  check(o);
  for (int q = 0; q < d(); ++q) m_[q] += o.m_[q];
  return *this;
}

RootMultiset pointwise_min(const RootMultiset& a, const RootMultiset& b) {
  a.check(b);
  RootMultiset out(a.d());
  for (int q = 0; q < a.d(); ++q) out.m_[q] = std::min(a.m_[q], b.m_[q]);
  return out;
}

RootMultiset pointwise_max(const RootMultiset& a, const RootMultiset& b) {
  a.check(b);
  RootMultiset out(a.d());
  for (int q = 0; q < a.d(); ++q) out.m_[q] = std::max(a.m_[q], b.m_[q]);
  return out;
}

bool RootMultiset::leq(const RootMultiset& o) const {
  check(o);
  for (int q = 0; q < d(); ++q)
    if (m_[q] > o.m_[q]) return false;
  return true;
}

namespace {

std::string cyclotomic_string(int n) {
  const auto c = cyclotomic_polynomial(n);
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    const Integer a = abs(c[i]);
    if (out.empty())
      out += c[i] < 0 ? "-" : "";
    else
      out += c[i] < 0 ? "-" : "+";
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0) out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

}  // namespace

std::string RootMultiset::to_string() const {
  std::ostringstream out;
  bool any = false;
  std::vector<int> odd;
  for (int n = 1; n <= d(); ++n) {
    if (d() % n != 0) continue;
    std::set<int> values;
    for (int q = 0; q < d(); ++q)
      if (order_of(q) == n) values.insert(m_[q]);
    if (values.size() != 1) {
      for (int q = 0; q < d(); ++q)
        if (order_of(q) == n && m_[q] > 0) odd.push_back(q);
      continue;
    }
    const int e = *values.begin();
    if (e == 0) continue;
    if (any) out << ' ';
    any = true;
    out << '(' << cyclotomic_string(n) << ')';
    if (e > 1) out << '^' << e;
  }
  for (int q : odd) {
    if (any) out << ' ';
    any = true;
    out << "[q=" << q << "]^" << m_[q];
  }
  return any ? out.str() : "1";
}

void AbstractRoots::add(int r, int n, int mult) {
  if (n < 1) throw std::invalid_argument("root order must be positive");
  r %= n;
  if (r < 0) r += n;
  const int g = std::gcd(r, n);
  if (r == 0)
    n = 1;
  else {
    r /= g;
    n /= g;
  }
  e_[{r, n}] += mult;
}

AbstractRoots& AbstractRoots::operator+=(const AbstractRoots& o) {
  for (const auto& [k, v] : o.e_) e_[k] += v;
  return *this;
}

int AbstractRoots::degree() const {
  int s = 0;
  for (const auto& [k, v] : e_) s += v;
  return s;
}

AbstractRoots local_alexander(const TypeTag& tag) {
  AbstractRoots out;
  switch (tag.kind) {
    case SingularityKind::A: {
      const int n = tag.n;
      if (n < 1) throw UnsupportedSingularity("A_n needs n >= 1");
      // t^(n+1) = (-1)^(n+1) at (n + 1 + 2j) / (2(n+1)); j = 0 is the root -1.
      for (int j = 1; j <= n; ++j) out.add(n + 1 + 2 * j, 2 * (n + 1));
      return out;
    }
    case SingularityKind::ordinary: {
      const int m = tag.n;
      if (m < 2) throw UnsupportedSingularity("ordinary point needs m >= 2");
      for (int j = 0; j < m; ++j) out.add(j, m, m - 2);
      out.add(0, 1, 1);
      return out;
    }
    case SingularityKind::other:
      break;
  }
  throw UnsupportedSingularity("no local Alexander data for type " + tag.to_string());
}

RootMultiset restrict_to_d(const AbstractRoots& roots, int d) {
  RootMultiset out(d);
  for (const auto& [key, mult] : roots.entries()) {
    const auto [r, n] = key;
    if (d % n != 0 || mult == 0) continue;
    out[r * (d / n)] += mult;
  }
  return out;
}

std::optional<UpperBound> try_component_upper_bound(const Arrangement& arr, const SingularLocusReport& report) {
  if (!report.complete) return std::nullopt;
  const int d = arr.degree();
  std::optional<UpperBound> best;
  UpperBound acc{RootMultiset(d), {}, {}};
  for (const auto& c : arr.components()) {
    if (!c.irreducible_asserted) {
      acc.skipped.push_back(c.label + " (not known to be irreducible)");
      continue;
    }
    RootMultiset prod(d);
    bool ok = true;
    for (const auto& s : report.singularities) {
      if (!c.poly.evaluate(s.point).is_zero()) continue;
      if (s.type.kind == SingularityKind::other) {
        ok = false;
        break;
      }
      prod += restrict_to_d(local_alexander(s.type), d);
    }
    if (!ok) {
      acc.skipped.push_back(c.label + " (meets an unsupported singularity)");
      continue;
    }
    acc.used.push_back(c.label);
    acc.bound = acc.used.size() == 1 ? prod : pointwise_min(acc.bound, prod);
  }
  if (acc.used.empty()) return std::nullopt;
  return acc;
}

UpperBound component_upper_bound(const Arrangement& arr, const SingularLocusReport& report) {
  auto b = try_component_upper_bound(arr, report);
  if (!b) throw std::runtime_error("no valid divisor bound");
  return *b;
}

std::string to_string(PencilKind k) {
  switch (k) {
    case PencilKind::reduced_members:
      return "reduced_members";
    case PencilKind::halphen_reduced:
      return "halphen_reduced";
    case PencilKind::halphen_nonreduced:
      return "halphen_nonreduced";
  }
  return "?";
}

std::string PencilStructure::to_string() const {
  std::string s = arrkit::to_string(kind) + "(" + std::to_string(ell);
  if (kind != PencilKind::reduced_members) s += "," + std::to_string(k);
  return s + ")";
}

std::optional<PencilStructure> pencil_structure(const Arrangement& arr, std::string* reason) {
  auto fail = [&](const std::string& why) -> std::optional<PencilStructure> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (!arr.pencil) return fail("no pencil attached");
  const PencilSpec& p = *arr.pencil;
  if (p.g1.degree() != p.g2.degree()) return fail("g1 and g2 have different degrees");
  const bool halphen = p.has_halphen();
  if (halphen && !halphen_verify(p)) return fail("h^k differs from g2");
  MultiPoly prod = MultiPoly::constant(1, arr.field_order());
  int reduced = 0, nonreduced = 0;
  bool nonreduced_is_h = false;
  for (const auto& m : p.members) {
    const auto support = p.member_support(m);
    if (!support) return fail("a non-reduced member has no known reduction");
    prod *= *support;
    if (m.reduced) {
      ++reduced;
    } else {
      ++nonreduced;
      nonreduced_is_h = halphen && m.s.is_zero() && support->proportionality(*p.h).has_value();
    }
  }
  if (!prod.proportionality(arr.f_red())) return fail("the members do not multiply to the arrangement");
  if (nonreduced == 0) {
    if (reduced < 3) return fail("fewer than three members");
    return PencilStructure{halphen ? PencilKind::halphen_reduced : PencilKind::reduced_members, reduced, halphen ? p.k : 1};
  }
  if (nonreduced == 1 && nonreduced_is_h && reduced >= 2)
    return PencilStructure{PencilKind::halphen_nonreduced, reduced + 1, p.k};
  return fail("non-reduced members outside the Halphen setting");
}

LowerBound pencil_lower_bound(int d, const std::optional<PencilStructure>& ps, int r) {
  LowerBound out{RootMultiset(d), {}};
  if (ps) {
    const int ell = ps->ell, k = ps->k;
    switch (ps->kind) {
      case PencilKind::halphen_reduced:
        out.bound.raise_order(k * ell, ell - 1);
        out.sources.push_back("primitive roots of order " + std::to_string(k * ell) + " >= " + std::to_string(ell - 1));
        [[fallthrough]];
      case PencilKind::reduced_members:
        // Every alpha != 1 with alpha^ell = 1: the local system with monodromy
        // alpha about the ell members is defined for any such alpha.
        for (int n = 2; n <= ell; ++n)
          if (ell % n == 0) out.bound.raise_order(n, ell - 2);
        out.sources.push_back("roots alpha != 1 with alpha^" + std::to_string(ell) + " = 1 >= " +
                              std::to_string(ell - 2));
        break;
      case PencilKind::halphen_nonreduced: {
        const int n = k * (ell - 1) + 1;
        out.bound.raise_order(n, ell - 2);
        out.sources.push_back("roots of order " + std::to_string(n) + " >= " + std::to_string(ell - 2));
        break;
      }
    }
  }
  out.bound[0] = r - 1;
  out.sources.push_back("root 1 = r - 1 = " + std::to_string(r - 1));
  return out;
}

AlexanderBounds alexander_bounds(const Arrangement& arr, const SingularLocusReport& report) {
  const int d = arr.degree(), r = arr.count();
  AlexanderBounds b;
  const LowerBound lo = pencil_lower_bound(d, pencil_structure(arr), r);
  b.lower = lo.bound;
  b.lower_sources = lo.sources;
  if (auto up = try_component_upper_bound(arr, report)) {
    RootMultiset u = up->bound;
    if (u[0] < r - 1) b.consistent = false;
    u[0] = r - 1;
    b.upper = u;
    b.upper_components = up->used;
    b.skipped_components = up->skipped;
    b.consistent = b.consistent && b.lower.leq(u);
    bool all = true;
    for (int q = 0; q < d; ++q) {
      if (b.lower[q] == u[q])
        b.exact_at.push_back(q);
      else
        all = false;
    }
    b.determined = all;
  } else {
    b.exact_at.push_back(0);
  }
  return b;
}

std::optional<RootMultiset> derive_delta2(const RootMultiset& delta1, int chi, int /*r*/) {
  RootMultiset out(delta1.d());
  for (int q = 0; q < delta1.d(); ++q) {
    out[q] = chi + delta1[q] - (q == 0 ? 1 : 0);
    if (out[q] < 0) return std::nullopt;
  }
  return out;
}

CandidateVerdict verify_candidate(int r, const RootMultiset& cand, const AlexanderBounds& bounds, int chi) {
  if (cand.d() != bounds.lower.d()) throw std::invalid_argument("candidate and bounds use different d");
  CandidateVerdict v;
  for (int q = 0; q < cand.d(); ++q)
    if (cand[q] < bounds.lower[q])
      v.failures.push_back("below the lower bound at q=" + std::to_string(q) + " (" + std::to_string(cand[q]) + " < " +
                           std::to_string(bounds.lower[q]) + ")");
  if (bounds.upper)
    for (int q = 0; q < cand.d(); ++q)
      if (cand[q] > (*bounds.upper)[q])
        v.failures.push_back("above the upper bound at q=" + std::to_string(q) + " (" + std::to_string(cand[q]) +
                             " > " + std::to_string((*bounds.upper)[q]) + ")");
  if (cand[0] != r - 1)
    v.failures.push_back("multiplicity of 1 is " + std::to_string(cand[0]) + ", expected r - 1 = " + std::to_string(r - 1));
  v.delta2 = derive_delta2(cand, chi, r);
  if (!v.delta2) v.failures.push_back("Euler identity forces a negative multiplicity in Delta^2");
  v.pass = v.failures.empty();
  return v;
}

namespace {

class CandidateParser {
 public:
  CandidateParser(const std::string& s, int d) : s_(s), out_(d) {}

  RootMultiset parse() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '1' && rest_is_blank(pos_ + 1)) return out_;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      factor();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
    }
    return out_;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw CandidateParseError("candidate parse error at position " + std::to_string(pos_) + ": " + m);
  }
  bool rest_is_blank(std::size_t p) const {
    for (; p < s_.size(); ++p)
      if (!std::isspace(static_cast<unsigned char>(s_[p]))) return false;
    return true;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small unsigned integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  void factor() {
    expect('(');
    expect('t');
    int a = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      a = number();
      if (a < 1) fail("exponent of t must be positive");
    }
    skip();
    if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) fail("expected '+1' or '-1'");
    const bool plus = s_[pos_] == '+';
    ++pos_;
    if (number() != 1) fail("only t^a - 1 and t^a + 1 factors are supported");
    expect(')');
    int e = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      e = number();
    }
    // t^a = 1 at j/a; t^a = -1 at (2j+1)/(2a).
    AbstractRoots roots;
    for (int j = 0; j < a; ++j) {
      if (plus)
        roots.add(2 * j + 1, 2 * a, e);
      else
        roots.add(j, a, e);
    }
    for (const auto& [key, m] : roots.entries())
      if (out_.d() % key.second != 0)
        fail("root of order " + std::to_string(key.second) + " is not a d-th root of unity (d = " +
             std::to_string(out_.d()) + ")");
    out_ += restrict_to_d(roots, out_.d());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  RootMultiset out_;
};

bool is_prime_power(int n, int& p) {
  if (n < 2) return false;
  for (p = 2; p * p <= n; ++p)
    if (n % p == 0) break;
  if (p * p > n) p = n;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

RootMultiset parse_candidate(const std::string& text, int d) { return CandidateParser(text, d).parse(); }

std::vector<int> conjecture_screen(const RootMultiset& delta1) {
  std::set<int> out;
  for (int q = 0; q < delta1.d(); ++q) {
    if (delta1[q] == 0) continue;
    const int n = delta1.order_of(q);
    int p = 0;
    if (is_prime_power(n, p) && n != 2 && n != 3 && n != 4) out.insert(n);
  }
  return {out.begin(), out.end()};
}

}  // namespace arrkit
