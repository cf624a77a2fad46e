#include "arrkit/linalg.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "arrkit/modular.hpp"

namespace arrkit {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::automatic:
      return "auto";
    case RankMethod::exact:
      return "exact";
    case RankMethod::modular:
      return "modular";
    case RankMethod::certified:
      return "certified";
  }
  return "?";
}

RankMethod parse_rank_method(const std::string& s) {
  if (s == "auto") return RankMethod::automatic;
  if (s == "exact") return RankMethod::exact;
  if (s == "modular") return RankMethod::modular;
  if (s == "certified") return RankMethod::certified;
  throw std::invalid_argument("unknown rank method: " + s);
}

namespace {

using Row = std::vector<std::pair<int, CycloNumber>>;

// row -= f * pivot, both sorted by column.
Row axpy(const Row& row, const CycloNumber& f, const Row& pivot) {
  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(f * pivot[j].second));
      ++j;
    } else {
      CycloNumber v = row[i].second - f * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int exact_rank(const SparseMatrix& m) {
  // Pivot rows keyed by leading column, each normalized to leading value 1.
  std::map<int, Row> pivots;
  for (const auto& input : m.rows) {
    Row row = input;
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const CycloNumber inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = axpy(row, row.front().second, it->second);
    }
  }
  return static_cast<int>(pivots.size());
}

namespace {

double log2_hadamard(const SparseMatrix& m) {
  double total = 0;
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    Integer lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    Rational norm2 = 0;
    for (const auto& [c, v] : row) {
      Rational s = 0;
      for (const auto& q : v.coeffs()) s += abs(q);
      s *= lcm;
      norm2 += s * s;
    }
    total += 0.5 * std::log2(norm2.get_d()) + 1e-9;
  }
  return total;
}

}  // namespace

RankResult modular_rank(const SparseMatrix& m, int primes, bool certified) {
  RankResult res;
  res.method = certified ? RankMethod::certified : RankMethod::modular;
  if (m.rows.empty() || m.cols == 0) {
    res.proven = true;
    return res;
  }
  const double needed = certified ? euler_phi(m.order) * log2_hadamard(m) + 1.0 : 0.0;
  double have = 0;
  int used = 0;
  int best = 0;
  int skip = 0;
  const int max_rank = static_cast<int>(std::min<std::size_t>(m.rows.size(), m.cols));
  while (certified ? (have <= needed && best < max_rank) : used < primes) {
    const CycloPrime prime = cyclo_primes(m.order, 1, skip++)[0];
    std::vector<std::vector<std::uint32_t>> dense(m.rows.size(), std::vector<std::uint32_t>(m.cols, 0));
    bool ok = true;
    for (std::size_t i = 0; i < m.rows.size() && ok; ++i)
      for (const auto& [c, v] : m.rows[i]) {
        const auto r = prime.reduce(v);
        if (!r) {
          ok = false;
          break;
        }
        dense[i][c] = *r;
      }
    if (!ok) continue;
    best = std::max(best, rank_mod_p(dense, prime.field));
    have += std::log2(static_cast<double>(prime.field.p()));
    ++used;
  }
  res.rank = best;
  res.proven = certified;
  return res;
}

RankResult rank(const SparseMatrix& m, const RankOptions& opt) {
  RankMethod method = opt.method;
  if (method == RankMethod::automatic)
    method = static_cast<long>(m.rows.size()) * m.cols <= opt.exact_threshold ? RankMethod::exact : RankMethod::modular;
  switch (method) {
    case RankMethod::exact:
      return {exact_rank(m), true, RankMethod::exact};
    case RankMethod::certified:
      return modular_rank(m, opt.primes, true);
    default:
      return modular_rank(m, opt.primes, false);
  }
}

std::vector<std::vector<CycloNumber>> kernel_basis(const SparseMatrix& m) {
  const int cols = m.cols;
  std::vector<std::vector<CycloNumber>> a;
  for (const auto& row : m.rows) {
    std::vector<CycloNumber> d(cols, CycloNumber::zero(m.order));
    for (const auto& [c, v] : row) d[c] = v;
    a.push_back(std::move(d));
  }
  std::vector<int> pivot_cols;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const CycloNumber inv = a[r][c].inverse();
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const CycloNumber f = a[i][c];
      for (int j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<CycloNumber>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloNumber> v(cols, CycloNumber::zero(m.order));
    v[free] = CycloNumber::one(m.order);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseMatrix MacaulaySystem::to_matrix() const {
  SparseMatrix m;
  m.order = order;
  m.cols = static_cast<int>(columns.size());
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) index.emplace(columns[i].key(), static_cast<int>(i));
  m.rows.reserve(rows.size());
  for (const auto& [g, mono] : rows) {
    Row row;
    for (const auto& t : generators.at(g).terms()) {
      const Monomial prod = t.mono * mono;
      if (truncate_below >= 0 && prod.degree() >= truncate_below) continue;
      auto it = index.find(prod.key());
      if (it == index.end()) throw std::logic_error("Macaulay row leaves the column set");
      row.emplace_back(it->second, t.coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace arrkit
