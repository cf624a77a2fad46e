#include "arrkit/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "arrkit/univariate.hpp"

namespace arrkit {

char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
  return a.e[1] > b.e[1];
}

std::vector<Monomial> monomials_of_degree(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  out.reserve((k + 1) * (k + 2) / 2);
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.emplace_back(a, b, k - a - b);
  return out;
}

std::vector<Monomial> binary_monomials_of_degree(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  for (int a = k; a >= 0; --a) out.emplace_back(a, k - a, 0);
  return out;
}

Matrix3 identity_matrix3(int order) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = CycloNumber(i == j ? 1L : 0L, order);
  return m;
}

CycloNumber determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  const CycloNumber det = determinant(m);
  if (det.is_zero()) throw DivisionByZero("singular 3x3 matrix");
  const CycloNumber inv = det.inverse();
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv;
    }
  return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  const int order = a[0][0].order();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycloNumber s = CycloNumber::zero(order);
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

int matrix_rank(const Matrix3& m) {
  Matrix3 a = m;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const CycloNumber inv = a[rank][col].inverse();
    for (int r = rank + 1; r < 3; ++r) {
      if (a[r][col].is_zero()) continue;
      const CycloNumber f = a[r][col] * inv;
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

// ProjPoint

ProjPoint::ProjPoint(CycloNumber x, CycloNumber y, CycloNumber z) : c_{std::move(x), std::move(y), std::move(z)} {
  if (c_[0].order() != c_[1].order() || c_[0].order() != c_[2].order())
    throw FieldMismatch("point coordinates over different fields");
  int k = 2;
  while (k >= 0 && c_[k].is_zero()) --k;
  if (k < 0) throw std::invalid_argument("(0:0:0) is not a projective point");
  if (!c_[k].is_one()) {
    const CycloNumber inv = c_[k].inverse();
    for (int i = 0; i < 3; ++i) c_[i] *= inv;
  }
}

ProjPoint::ProjPoint(long x, long y, long z, int order)
    : ProjPoint(CycloNumber(x, order), CycloNumber(y, order), CycloNumber(z, order)) {}

int ProjPoint::chart() const {
  for (int k = 2; k >= 0; --k)
    if (!c_[k].is_zero()) return k;
  return 2;
}

ProjPoint ProjPoint::transformed(const Matrix3& m) const {
  std::array<CycloNumber, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = CycloNumber::zero(field_order());
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * c_[j];
  }
  return ProjPoint(r[0], r[1], r[2]);
}

std::string ProjPoint::to_string() const {
  return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (int i = 0; i < 3; ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

// MultiPoly

namespace {

void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms = std::move(out);
}

std::vector<Term> from_map(std::unordered_map<std::uint64_t, Term>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [k, t] : acc)
    if (!t.coeff.is_zero()) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<Term> terms, int order) : order_(order), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.coeff.order() != order_) throw FieldMismatch("term coefficient over a different field");
  normalize_terms(terms_);
}

MultiPoly MultiPoly::constant(const CycloNumber& c) { return term(Monomial{}, c); }

MultiPoly MultiPoly::variable(Var v, int order) {
  Monomial m;
  m.e[static_cast<int>(v)] = 1;
  return term(m, CycloNumber::one(order));
}

MultiPoly MultiPoly::term(const Monomial& m, const CycloNumber& c) {
  MultiPoly p(c.order());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

void MultiPoly::check_order(const MultiPoly& o) const {
  if (order_ != o.order_) throw FieldMismatch("polynomials over different cyclotomic fields");
}

int MultiPoly::low_degree() const {
  if (terms_.empty()) return -1;
  return terms_.back().mono.degree();
}

int MultiPoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

bool MultiPoly::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

CycloNumber MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return CycloNumber::zero(order_);
}

MultiPoly MultiPoly::homogeneous_part(int k) const {
  MultiPoly r(order_);
  for (const auto& t : terms_)
    if (t.mono.degree() == k) r.terms_.push_back(t);
  return r;
}

MultiPoly MultiPoly::truncated(int n) const {
  MultiPoly r(order_);
  for (const auto& t : terms_)
    if (t.mono.degree() < n) r.terms_.push_back(t);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_order(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].mono, o.terms_[j].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_greater(o.terms_[j].mono, terms_[i].mono)) {
      out.push_back(o.terms_[j++]);
    } else {
      CycloNumber c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_order(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.order_);
  if (b.terms_.size() == 1 && b.terms_[0].mono.degree() == 0) return a * b.terms_[0].coeff;
  if (a.terms_.size() == 1 && a.terms_[0].mono.degree() == 0) return b * a.terms_[0].coeff;
  std::unordered_map<std::uint64_t, Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      const Monomial m = s.mono * t.mono;
      auto [it, inserted] = acc.try_emplace(m.key(), Term{m, CycloNumber::zero(a.order_)});
      it->second.coeff += s.coeff * t.coeff;
    }
  MultiPoly r(a.order_);
  r.terms_ = from_map(acc);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const CycloNumber& c) {
  if (c.order() != order_) throw FieldMismatch("scalar over a different field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MultiPoly result = constant(1, order_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const int i = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.e[i] == 0) continue;
    Monomial m = t.mono;
    const long k = m.e[i];
    --m.e[i];
    out.push_back({m, t.coeff * Rational(k)});
  }
  return MultiPoly(std::move(out), order_);
}

CycloNumber MultiPoly::evaluate(const std::array<CycloNumber, 3>& at) const {
  for (const auto& c : at)
    if (c.order() != order_) throw FieldMismatch("evaluation point over a different field");
  std::array<std::vector<CycloNumber>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    const int d = degree_in(static_cast<Var>(i));
    powers[i].push_back(CycloNumber::one(order_));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * at[i]);
  }
  CycloNumber s = CycloNumber::zero(order_);
  for (const auto& t : terms_) s += t.coeff * powers[0][t.mono.e[0]] * powers[1][t.mono.e[1]] * powers[2][t.mono.e[2]];
  return s;
}

MultiPoly MultiPoly::compose(const std::array<MultiPoly, 3>& images) const {
  for (const auto& q : images) check_order(q);
  std::array<std::vector<MultiPoly>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    const int d = degree_in(static_cast<Var>(i));
    powers[i].push_back(constant(1, order_));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  std::unordered_map<std::uint64_t, Term> acc;
  for (const auto& t : terms_) {
    const MultiPoly prod = powers[0][t.mono.e[0]] * powers[1][t.mono.e[1]] * powers[2][t.mono.e[2]];
    for (const auto& s : prod.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono.key(), Term{s.mono, CycloNumber::zero(order_)});
      it->second.coeff += t.coeff * s.coeff;
    }
  }
  MultiPoly r(order_);
  r.terms_ = from_map(acc);
  return r;
}

MultiPoly MultiPoly::substitute_linear(const Matrix3& m) const {
  if (determinant(m).is_zero()) throw DivisionByZero("singular linear substitution");
  std::array<MultiPoly, 3> images;
  for (int i = 0; i < 3; ++i) {
    images[i] = MultiPoly(order_);
    for (int j = 0; j < 3; ++j) images[i] += variable(static_cast<Var>(j), order_) * m[i][j];
  }
  return compose(images);
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& o) const {
  check_order(o);
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return MultiPoly(order_);
  const Monomial lm = o.leading_monomial();
  const CycloNumber inv = o.leading_coefficient().inverse();
  MultiPoly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    if (!lm.divides(lt.mono)) return std::nullopt;
    const Term q{lt.mono / lm, lt.coeff * inv};
    rem -= o.shifted(q.mono) * q.coeff;
    quot.push_back(q);
  }
  MultiPoly r(order_);
  r.terms_ = std::move(quot);  // produced in descending order
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return *this * leading_coefficient().inverse();
}

std::optional<CycloNumber> MultiPoly::proportionality(const MultiPoly& o) const {
  check_order(o);
  if (is_zero() || o.is_zero() || terms_.size() != o.terms_.size()) return std::nullopt;
  const CycloNumber c = leading_coefficient() / o.leading_coefficient();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono) return std::nullopt;
    if (terms_[i].coeff != c * o.terms_[i].coeff) return std::nullopt;
  }
  return c;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const int i = static_cast<int>(v);
  const int d = degree_in(v);
  std::vector<std::vector<Term>> parts(std::max(d + 1, 0));
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const int k = m.e[i];
    m.e[i] = 0;
    parts[k].push_back({m, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(std::move(p), order_);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    CycloNumber c = t.coeff;
    bool negative = false;
    if (!c.is_compound() && c.to_string().front() == '-') {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool has_mono = t.mono.degree() > 0;
    if (!has_mono) {
      out << (c.is_compound() ? "(" + c.to_string() + ")" : c.to_string());
      continue;
    }
    if (!c.is_one()) out << (c.is_compound() ? "(" + c.to_string() + ")" : c.to_string()) << "*";
    bool first_var = true;
    for (int i = 0; i < 3; ++i) {
      if (t.mono.e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << "xyz"[i];
      if (t.mono.e[i] > 1) out << "^" << t.mono.e[i];
    }
  }
  return out.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly localize_at(const MultiPoly& p, const ProjPoint& pt) {
  if (p.field_order() != pt.field_order()) throw FieldMismatch("point and polynomial over different fields");
  const int order = p.field_order();
  const int c = pt.chart();
  std::array<MultiPoly, 3> images;
  images[c] = MultiPoly::constant(1, order);
  Var local = Var::x;
  for (int i = 0; i < 3; ++i) {
    if (i == c) continue;
    images[i] = MultiPoly::variable(local, order) + MultiPoly::constant(pt[i]);
    local = Var::y;
  }
  return p.compose(images);
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, int order) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(1, order);
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(1, order);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(order);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = num.exact_divide(prev);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(order);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.field_order() != q.field_order()) throw FieldMismatch("resultant over different fields");
  const int order = p.field_order();
  if (p.is_zero() || q.is_zero()) return MultiPoly(order);
  const auto a = p.coefficients_in(v);
  const auto b = q.coefficients_in(v);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m == 0) return p.pow(n);
  if (n == 0) return q.pow(m);
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, MultiPoly(order)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[n + r][r + i] = b[n - i];
  return bareiss_determinant(std::move(syl), order);
}

namespace {

UniPoly dehomogenize(const MultiPoly& p, Var first) {
  const int order = p.field_order();
  std::vector<CycloNumber> c(std::max(p.degree_in(first) + 1, 0), CycloNumber::zero(order));
  for (const auto& t : p.terms()) c[t.mono[first]] += t.coeff;
  return UniPoly(std::move(c), order);
}

int power_of(const MultiPoly& p, Var v) {
  int e = -1;
  for (const auto& t : p.terms()) e = e < 0 ? t.mono[v] : std::min<int>(e, t.mono[v]);
  return std::max(e, 0);
}

}  // namespace

BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b) {
  const int order = a.poly.field_order();
  if (a.poly.field_order() != b.poly.field_order()) throw FieldMismatch("binary_gcd over different fields");
  if (a.first != b.first || a.second != b.second) throw std::invalid_argument("binary_gcd: variable mismatch");
  if (a.poly.is_zero() && b.poly.is_zero()) return {MultiPoly(order), a.first, a.second};
  int e;
  UniPoly g;
  if (a.poly.is_zero()) {
    e = power_of(b.poly, b.second);
    g = dehomogenize(b.poly, b.first).monic();
  } else if (b.poly.is_zero()) {
    e = power_of(a.poly, a.second);
    g = dehomogenize(a.poly, a.first).monic();
  } else {
    e = std::min(power_of(a.poly, a.second), power_of(b.poly, b.second));
    g = gcd(dehomogenize(a.poly, a.first), dehomogenize(b.poly, b.first));
  }
  const int k = g.degree();
  std::vector<Term> terms;
  for (int i = 0; i <= k; ++i) {
    if (g.coeff(i).is_zero()) continue;
    Monomial mono;
    mono.e[static_cast<int>(a.first)] = static_cast<std::uint16_t>(i);
    mono.e[static_cast<int>(a.second)] = static_cast<std::uint16_t>(k - i + e);
    terms.push_back({mono, g.coeff(i)});
  }
  return {MultiPoly(std::move(terms), order), a.first, a.second};
}

std::string to_string(ConicType t) {
  switch (t) {
    case ConicType::smooth:
      return "smooth";
    case ConicType::line_pair:
      return "line_pair";
    case ConicType::double_line:
      return "double_line";
  }
  return "?";
}

Matrix3 conic_matrix(const MultiPoly& q) {
  if (q.degree() != 2 || !q.is_homogeneous()) throw std::invalid_argument("not a quadratic form: " + q.to_string());
  Matrix3 m;
  const Rational half(1, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Monomial mono;
      ++mono.e[i];
      ++mono.e[j];
      m[i][j] = i == j ? q.coefficient(mono) : q.coefficient(mono) * half;
    }
  return m;
}

ConicType conic_classify(const MultiPoly& q) {
  switch (matrix_rank(conic_matrix(q))) {
    case 3:
      return ConicType::smooth;
    case 2:
      return ConicType::line_pair;
    default:
      return ConicType::double_line;
  }
}

}  // namespace arrkit
