#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrkit/cyclotomic.hpp"

namespace arrkit {

/// Dense univariate polynomial over Q(zeta_n), lowest coefficient first.
class UniPoly {
 public:
  explicit UniPoly(int order = 3) : order_(order) {}
  UniPoly(std::vector<CycloNumber> coeffs, int order);

  static UniPoly monomial(const CycloNumber& c, int degree);

  int field_order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycloNumber>& coeffs() const { return c_; }
  CycloNumber coeff(int i) const;
  const CycloNumber& leading() const { return c_.back(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const CycloNumber& s) const;

  /// a = q*b + r with deg r < deg b.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  UniPoly derivative() const;
  CycloNumber evaluate(const CycloNumber& t) const;
  UniPoly monic() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  int order_;
  std::vector<CycloNumber> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Yun's square-free decomposition: pairs (factor, multiplicity), factors monic,
/// square-free and pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

}  // namespace arrkit
