#include "arrkit/pencil.hpp"

#include <algorithm>
#include <set>

#include "arrkit/linalg.hpp"
#include "arrkit/roots.hpp"

namespace arrkit {

PencilParam normalize_param(const CycloNumber& s, const CycloNumber& t) {
  if (!t.is_zero()) return {s / t, CycloNumber::one(t.order())};
  if (s.is_zero()) throw std::invalid_argument("(0:0) is not a pencil parameter");
  return {CycloNumber::one(s.order()), CycloNumber::zero(s.order())};
}

std::string to_string(const PencilParam& p) { return "(" + p.first.to_string() + " : " + p.second.to_string() + ")"; }

std::optional<PencilParam> pencil_membership(const MultiPoly& p, const PencilSpec& pencil) {
  const int order = p.field_order();
  if (p.is_zero() || p.degree() != pencil.g1.degree()) return std::nullopt;
  // Unknowns (s, t, c): s*g1 + t*g2 - c*p = 0, one equation per monomial.
  std::set<std::uint64_t> seen;
  std::vector<Monomial> monos;
  for (const MultiPoly* q : {&pencil.g1, &pencil.g2, &p})
    for (const auto& t : q->terms())
      if (seen.insert(t.mono.key()).second) monos.push_back(t.mono);
  SparseMatrix m;
  m.order = order;
  m.cols = 3;
  for (const auto& mono : monos) {
    std::vector<std::pair<int, CycloNumber>> row;
    const CycloNumber a = pencil.g1.coefficient(mono), b = pencil.g2.coefficient(mono), c = p.coefficient(mono);
    if (!a.is_zero()) row.emplace_back(0, a);
    if (!b.is_zero()) row.emplace_back(1, b);
    if (!c.is_zero()) row.emplace_back(2, -c);
    m.rows.push_back(std::move(row));
  }
  for (const auto& v : kernel_basis(m)) {
    if (v[2].is_zero()) continue;
    if (v[0].is_zero() && v[1].is_zero()) continue;
    return normalize_param(v[0], v[1]);
  }
  return std::nullopt;
}

bool halphen_verify(const PencilSpec& pencil) {
  if (!pencil.h) throw std::invalid_argument("pencil has no Halphen data");
  if (pencil.k < 1) return false;
  return pencil.h->pow(pencil.k) == pencil.g2;
}

bool group_invariance(const Arrangement& arr, const std::vector<Matrix3>& gens) {
  for (const auto& g : gens) {
    const MultiPoly moved = arr.f_red().substitute_linear(inverse(g));
    if (!moved.proportionality(arr.f_red())) return false;
  }
  return true;
}

std::string to_string(ConicPencilType t) {
  switch (t) {
    case ConicPencilType::I:
      return "I";
    case ConicPencilType::II:
      return "II";
    case ConicPencilType::III:
      return "III";
    case ConicPencilType::IV:
      return "IV";
    case ConicPencilType::V:
      return "V";
    case ConicPencilType::indeterminate:
      return "indeterminate";
  }
  return "?";
}

namespace {

MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ConicPencilAnalysis conic_pencil_analysis(const MultiPoly& q1, const MultiPoly& q2) {
  const int order = q1.field_order();
  const Matrix3 A = conic_matrix(q1), B = conic_matrix(q2);
  const MultiPoly s = MultiPoly::variable(Var::x, order), t = MultiPoly::variable(Var::y, order);
  std::array<std::array<MultiPoly, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = s * A[i][j] + t * B[i][j];
  ConicPencilAnalysis out;
  out.discriminant = det3(m);
  if (out.discriminant.is_zero()) throw std::invalid_argument("pencil has no smooth member");

  // Roots (u : 1) from the dehomogenized cubic, plus (1 : 0) when t divides it.
  std::vector<CycloNumber> coeffs(4, CycloNumber::zero(order));
  for (const auto& term : out.discriminant.terms()) coeffs[term.mono.e[0]] += term.coeff;
  const UniPoly cubic(coeffs, order);
  std::vector<std::pair<PencilParam, int>> roots;
  const int at_infinity = 3 - cubic.degree();
  if (at_infinity > 0) roots.push_back({{CycloNumber::one(order), CycloNumber::zero(order)}, at_infinity});
  const bool squarefree = at_infinity <= 1 && (cubic.degree() < 2 || gcd(cubic, cubic.derivative()).degree() == 0);
  if (cubic.degree() >= 1)
    for (const auto& [r, mult] : find_roots(cubic).roots) roots.push_back({{r, CycloNumber::one(order)}, mult});
  int total = 0;
  for (const auto& [p, mult] : roots) {
    Matrix3 mm;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mm[i][j] = A[i][j] * p.first + B[i][j] * p.second;
    out.degenerate.push_back({p, mult, matrix_rank(mm)});
    total += mult;
  }
  // Three distinct degenerate members; they need not be defined over the field.
  if (squarefree) {
    out.type = ConicPencilType::I;
    return out;
  }
  if (total != 3) return out;  // a root outside the field
  const auto multiple = std::find_if(out.degenerate.begin(), out.degenerate.end(),
                                     [](const auto& d) { return d.root_multiplicity > 1; });
  if (multiple->root_multiplicity == 2)
    out.type = multiple->rank == 2 ? ConicPencilType::II : ConicPencilType::IV;
  else
    out.type = multiple->rank == 2 ? ConicPencilType::III : ConicPencilType::V;
  return out;
}

}  // namespace arrkit
