#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arrkit/cyclotomic.hpp"

namespace arrkit {

enum class Var : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};
char var_name(Var v);

/// Exponent triple (a, b, c) of x^a y^b z^c.
struct Monomial {
  std::array<std::uint16_t, 3> e{0, 0, 0};

  Monomial() = default;
  Monomial(int a, int b, int c)
      : e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)} {}

  int degree() const { return e[0] + e[1] + e[2]; }
  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  std::uint64_t key() const {
    return static_cast<std::uint64_t>(e[0]) | static_cast<std::uint64_t>(e[1]) << 16 |
           static_cast<std::uint64_t>(e[2]) << 32;
  }
  Monomial operator*(const Monomial& o) const {
    return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]};
  }
  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
  }
  Monomial operator/(const Monomial& o) const {
    return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex with x > y > z; true when a comes strictly before b.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// All monomials of total degree k in x, y, z, in graded-lex order.
std::vector<Monomial> monomials_of_degree(int k);
/// All monomials x^a y^b with a + b == k (z exponent zero), graded-lex order.
std::vector<Monomial> binary_monomials_of_degree(int k);

using Matrix3 = std::array<std::array<CycloNumber, 3>, 3>;
Matrix3 identity_matrix3(int order);
CycloNumber determinant(const Matrix3& m);
Matrix3 inverse(const Matrix3& m);
Matrix3 operator*(const Matrix3& a, const Matrix3& b);

class MultiPoly;

/// A point of P^2, normalized so that its last nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(CycloNumber x, CycloNumber y, CycloNumber z);
  ProjPoint(long x, long y, long z, int order);

  const std::array<CycloNumber, 3>& coords() const { return c_; }
  const CycloNumber& operator[](int i) const { return c_[i]; }
  int field_order() const { return c_[0].order(); }
  /// Index of the coordinate fixed to 1.
  int chart() const;

  ProjPoint transformed(const Matrix3& m) const;
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  std::array<CycloNumber, 3> c_;
};

struct Term {
  Monomial mono;
  CycloNumber coeff;
};

/// Sparse polynomial in x, y, z over Q(zeta_n). Terms are kept in
/// descending graded-lex order with no zero coefficients.
class MultiPoly {
 public:
  explicit MultiPoly(int order = 3) : order_(order) {}
  MultiPoly(std::vector<Term> terms, int order);

  static MultiPoly constant(const CycloNumber& c);
  static MultiPoly constant(long c, int order) { return constant(CycloNumber(c, order)); }
  static MultiPoly variable(Var v, int order);
  static MultiPoly term(const Monomial& m, const CycloNumber& c);

  int field_order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  /// Smallest total degree of a term; -1 for the zero polynomial.
  int low_degree() const;
  int degree_in(Var v) const;
  bool is_homogeneous() const;
  bool uses(Var v) const { return degree_in(v) > 0; }

  CycloNumber coefficient(const Monomial& m) const;
  const CycloNumber& leading_coefficient() const { return terms_.front().coeff; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  MultiPoly homogeneous_part(int k) const;
  /// Drops all terms of total degree >= n.
  MultiPoly truncated(int n) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const CycloNumber& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const CycloNumber& c) { return a *= c; }
  friend MultiPoly operator*(const CycloNumber& c, MultiPoly a) { return a *= c; }
  MultiPoly pow(int e) const;
  MultiPoly shifted(const Monomial& m) const;

  MultiPoly derivative(Var v) const;
  CycloNumber evaluate(const std::array<CycloNumber, 3>& at) const;
  CycloNumber evaluate(const ProjPoint& pt) const { return evaluate(pt.coords()); }

  /// p(q0, q1, q2).
  MultiPoly compose(const std::array<MultiPoly, 3>& images) const;
  /// p(M * (x,y,z)^T); throws on singular M.
  MultiPoly substitute_linear(const Matrix3& m) const;

  /// Quotient when o divides *this exactly.
  std::optional<MultiPoly> exact_divide(const MultiPoly& o) const;

  /// Scalar multiple with leading coefficient 1.
  MultiPoly monic() const;
  /// Nonzero c with *this == c * o, if any.
  std::optional<CycloNumber> proportionality(const MultiPoly& o) const;

  /// Coefficients with respect to v: result[i] multiplies v^i.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void check_order(const MultiPoly& o) const;
  int order_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q) { return p - q; }
inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
inline MultiPoly partial_derivative(const MultiPoly& p, Var v) { return p.derivative(v); }

/// Dehomogenizes in the chart where pt has coordinate 1 and moves pt to the
/// origin. The result uses x and y as the local coordinates (u, v), taken
/// from the two remaining projective coordinates in increasing index order.
MultiPoly localize_at(const MultiPoly& p, const ProjPoint& pt);

/// Sylvester resultant of p and q with respect to v, by fraction-free
/// elimination. Rows of p come first; Res(z^2-x^2, z^2-y^2, z) = (x^2-y^2)^2.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);

/// Determinant of a square matrix of polynomials (Bareiss).
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, int order);

/// A homogeneous polynomial in two of the three variables.
struct BinaryForm {
  MultiPoly poly;
  Var first = Var::x;
  Var second = Var::y;
};

/// Gcd of binary forms in (first, second), normalized so that the
/// coefficient of the highest power of `first` is 1.
BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b);

enum class ConicType { smooth, line_pair, double_line };
std::string to_string(ConicType t);

/// Symmetric 3x3 matrix of a quadratic form.
Matrix3 conic_matrix(const MultiPoly& q);
ConicType conic_classify(const MultiPoly& q);
int matrix_rank(const Matrix3& m);

}  // namespace arrkit
