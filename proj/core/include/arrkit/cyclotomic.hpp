#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arrkit {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Static data for Q(zeta_n): the cyclotomic polynomial Phi_n and the
/// reductions of the powers zeta^k, k < 2*phi(n), onto the power basis.
class CycloField {
 public:
  static const CycloField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  /// Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<Integer>& modulus() const { return modulus_; }
  /// Power-basis coordinates of zeta^k for 0 <= k < 2*degree-1.
  const std::vector<Integer>& power(int k) const { return powers_[k]; }

 private:
  explicit CycloField(int order);
  int order_;
  int degree_;
  std::vector<Integer> modulus_;
  std::vector<std::vector<Integer>> powers_;
};

std::vector<Integer> cyclotomic_polynomial(int n);
int euler_phi(int n);

/// An element of Q(zeta_n), stored as its canonical residue modulo Phi_n.
class CycloNumber {
 public:
  CycloNumber();  // zero in Q(zeta_3)
  CycloNumber(const Rational& q, int order);
  CycloNumber(long q, int order);
  CycloNumber(std::vector<Rational> coeffs, int order);

  static CycloNumber zero(int order) { return CycloNumber(0L, order); }
  static CycloNumber one(int order) { return CycloNumber(1L, order); }
  /// zeta_n^k for any integer k.
  static CycloNumber zeta(int order, long k = 1);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coordinate; meaningful as a value only when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& q);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& q) { return a *= q; }

  CycloNumber inverse() const;
  CycloNumber pow(long e) const;

  /// Image under zeta -> zeta^k, k coprime to n.
  CycloNumber galois(long k) const;
  /// Product of all Galois conjugates; a rational number.
  Rational norm() const;

  /// Least common multiple of the coordinate denominators.
  Integer denominator() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }
  /// Total order on canonical representations (not a field order).
  friend bool operator<(const CycloNumber& a, const CycloNumber& b);

  /// Textual form, e.g. "-1/2 + 3*w".
  std::string to_string() const;
  /// True when to_string() has more than one summand.
  bool is_compound() const;

  std::size_t hash() const;

 private:
  void check_order(const CycloNumber& o) const;
  int order_ = 3;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& c);

/// Same as the general constructor; named entry point for embedding rationals.
inline CycloNumber cyclo_from_rational(const Rational& q, int order) { return CycloNumber(q, order); }

/// Parses the cyclotomic textual form (rationals and the symbol w).
CycloNumber parse_cyclo(const std::string& text, int order);

std::string rational_to_string(const Rational& q);

}  // namespace arrkit
