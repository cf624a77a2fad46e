#include "arrkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace arrkit {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by monic b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(q);
  return q;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q*b + r over Q.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  return p;
}

CycloField::CycloField(int order) : order_(order), degree_(euler_phi(order)) {
  modulus_ = cyclotomic_polynomial(order);
  const int count = std::max(order, 2 * degree_ - 1);
  powers_.reserve(count);
  std::vector<Integer> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    powers_.push_back(cur);
    // multiply by zeta and reduce modulo the monic Phi_n
    Integer top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i];
  }
}

const CycloField& CycloField::get(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, std::unique_ptr<CycloField>(new CycloField(order))).first;
  return *it->second;
}

CycloNumber::CycloNumber() : CycloNumber(0L, 3) {}

CycloNumber::CycloNumber(const Rational& q, int order) : order_(order) {
  coeffs_.assign(CycloField::get(order).degree(), Rational(0));
  coeffs_[0] = q;
}

CycloNumber::CycloNumber(long q, int order) : CycloNumber(Rational(q), order) {}

CycloNumber::CycloNumber(std::vector<Rational> coeffs, int order) : order_(order) {
  const CycloField& f = CycloField::get(order);
  const int deg = f.degree();
  if (static_cast<int>(coeffs.size()) <= deg) {
    coeffs.resize(deg, Rational(0));
    coeffs_ = std::move(coeffs);
    return;
  }
  // Reduce a longer coefficient vector modulo Phi_n via zeta^k = sum power(k).
  coeffs_.assign(deg, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (static_cast<int>(k) < deg) {
      coeffs_[k] += coeffs[k];
      continue;
    }
    const long e = static_cast<long>(k) % order;
    const auto& pw = f.power(static_cast<int>(e));
    for (int i = 0; i < deg; ++i)
      if (pw[i] != 0) coeffs_[i] += coeffs[k] * pw[i];
  }
}

CycloNumber CycloNumber::zeta(int order, long k) {
  const CycloField& f = CycloField::get(order);
  long e = k % order;
  if (e < 0) e += order;
  const auto& pw = f.power(static_cast<int>(e));
  std::vector<Rational> c(pw.begin(), pw.end());
  return CycloNumber(std::move(c), order);
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_one() const { return coeffs_[0] == 1 && is_rational(); }

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycloNumber::check_order(const CycloNumber& o) const {
  if (order_ != o.order_)
    throw FieldMismatch("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                        std::to_string(o.order_));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  a.check_order(b);
  const int deg = static_cast<int>(a.coeffs_.size());
  if (deg == 1) {
    CycloNumber r(a);
    r.coeffs_[0] *= b.coeffs_[0];
    return r;
  }
  const CycloField& f = CycloField::get(a.order_);
  std::vector<Rational> full(2 * deg - 1, Rational(0));
  bool any = false;
  for (int i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      full[i + j] += a.coeffs_[i] * b.coeffs_[j];
      any = true;
    }
  }
  CycloNumber r(0L, a.order_);
  if (!any) return r;
  for (int i = 0; i < deg; ++i) r.coeffs_[i] = std::move(full[i]);
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (full[k] == 0) continue;
    const auto& pw = f.power(k);
    for (int i = 0; i < deg; ++i)
      if (pw[i] != 0) r.coeffs_[i] += full[k] * pw[i];
  }
  return r;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  *this = *this * o;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) {
  check_order(o);
  *this = *this * o.inverse();
  return *this;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta)");
  if (is_rational()) return CycloNumber(Rational(1 / coeffs_[0]), order_);
  // Extended Euclid in Q[x]: s*a + t*Phi = 1.
  const CycloField& f = CycloField::get(order_);
  RatPoly phi(f.modulus().begin(), f.modulus().end());
  RatPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  RatPoly r0 = phi, r1 = a;
  RatPoly s0{}, s1{Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_n is irreducible.
  const Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return CycloNumber(std::move(s1), order_);
}

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber base(*this), result(1L, order_);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycloNumber CycloNumber::galois(long k) const {
  if (std::gcd(k, static_cast<long>(order_)) != 1)
    throw std::invalid_argument("Galois exponent must be coprime to the order");
  CycloNumber r(0L, order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    CycloNumber term = zeta(order_, static_cast<long>(i) * k);
    term *= coeffs_[i];
    r += term;
  }
  return r;
}

Rational CycloNumber::norm() const {
  CycloNumber prod(1L, order_);
  for (long k = 1; k <= order_; ++k)
    if (std::gcd(k, static_cast<long>(order_)) == 1) prod *= galois(k);
  return prod.coeffs_[0];
}

Integer CycloNumber::denominator() const {
  Integer l = 1;
  for (const auto& c : coeffs_) {
    Integer d = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string CycloNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "w";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

bool CycloNumber::is_compound() const {
  int count = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++count;
  return count > 1;
}

std::size_t CycloNumber::hash() const {
  std::size_t h = static_cast<std::size_t>(order_);
  for (const auto& c : coeffs_) {
    const std::size_t limb = mpz_size(c.get_num_mpz_t()) ? mpz_getlimbn(c.get_num_mpz_t(), 0) : 0;
    h = h * 1000003u ^ (limb + static_cast<std::size_t>(mpz_sgn(c.get_num_mpz_t()) + 7));
    const std::size_t dl = mpz_getlimbn(c.get_den_mpz_t(), 0);
    h = h * 1000003u ^ dl;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c) { return os << c.to_string(); }

}  // namespace arrkit
