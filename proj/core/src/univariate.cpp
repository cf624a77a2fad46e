#include "arrkit/univariate.hpp"

#include <sstream>

namespace arrkit {

UniPoly::UniPoly(std::vector<CycloNumber> coeffs, int order) : order_(order), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.order() != order_) throw FieldMismatch("univariate coefficient order mismatch");
  trim();
}

UniPoly UniPoly::monomial(const CycloNumber& c, int degree) {
  std::vector<CycloNumber> v(degree + 1, CycloNumber::zero(c.order()));
  v[degree] = c;
  return UniPoly(std::move(v), c.order());
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloNumber UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return CycloNumber::zero(order_);
  return c_[i];
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (a.order_ != b.order_) throw FieldMismatch("univariate order mismatch");
  std::vector<CycloNumber> v(std::max(a.c_.size(), b.c_.size()), CycloNumber::zero(a.order_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v), a.order_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.order_ != b.order_) throw FieldMismatch("univariate order mismatch");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.order_);
  std::vector<CycloNumber> v(a.c_.size() + b.c_.size() - 1, CycloNumber::zero(a.order_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v), a.order_);
}

UniPoly UniPoly::scaled(const CycloNumber& s) const {
  UniPoly r(*this);
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  r = a;
  q = UniPoly(a.order_);
  if (a.degree() < b.degree()) return;
  std::vector<CycloNumber> qc(a.degree() - b.degree() + 1, CycloNumber::zero(a.order_));
  const CycloNumber inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    CycloNumber c = r.leading() * inv;
    for (int j = 0; j <= b.degree(); ++j) r.c_[shift + j] -= c * b.c_[j];
    qc[shift] = std::move(c);
    r.c_.pop_back();
    r.trim();
  }
  q = UniPoly(std::move(qc), a.order_);
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(order_);
  std::vector<CycloNumber> v;
  v.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UniPoly(std::move(v), order_);
}

CycloNumber UniPoly::evaluate(const CycloNumber& t) const {
  CycloNumber acc = CycloNumber::zero(order_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[i].to_string() << ")";
    if (i > 0) out << "*" << var << "^" << i;
  }
  return out.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() < 1) return out;
  const UniPoly g = f.monic();
  const UniPoly gp = g.derivative();
  const UniPoly a0 = gcd(g, gp);
  UniPoly b, c, r;
  UniPoly::divmod(g, a0, b, r);
  UniPoly::divmod(gp, a0, c, r);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    UniPoly nb, nc;
    UniPoly::divmod(b, a, nb, r);
    UniPoly::divmod(d, a, nc, r);
    b = nb;
    c = nc;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace arrkit
