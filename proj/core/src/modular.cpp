#include "arrkit/modular.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace arrkit {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus out of range");
  m_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inverse(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero mod p");
  return pow(a, p_ - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t reduce_integer(const Integer& z, std::uint32_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint32_t primitive_root_of_unity(const PrimeField& f, int n) {
  const auto factors = prime_factors(n);
  const std::uint64_t cofactor = (f.p() - 1) / n;
  for (std::uint32_t g = 2; g < f.p(); ++g) {
    const std::uint32_t z = f.pow(g, cofactor);
    if (n == 1) return 1;
    bool primitive = true;
    for (int q : factors)
      if (f.pow(z, n / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return z;
  }
  throw std::logic_error("no primitive root of unity found");
}

std::optional<std::uint32_t> CycloPrime::reduce(const CycloNumber& c) const {
  if (c.order() != order) throw FieldMismatch("reduction over a different field");
  const std::uint32_t p = field.p();
  std::uint32_t acc = 0, zpow = 1;
  for (const auto& q : c.coeffs()) {
    if (q != 0) {
      std::uint32_t v = reduce_integer(q.get_num(), p);
      if (q.get_den() != 1) {
        const std::uint32_t den = reduce_integer(q.get_den(), p);
        if (den == 0) return std::nullopt;
        v = field.mul(v, field.inverse(den));
      }
      acc = field.add(acc, field.mul(v, zpow));
    }
    zpow = field.mul(zpow, zeta);
  }
  return acc;
}

std::vector<CycloPrime> cyclo_primes(int order, int count, int skip) {
  static std::mutex mu;
  static std::map<int, std::vector<CycloPrime>> cache;
  std::lock_guard lock(mu);
  auto& list = cache[order];
  const std::uint64_t n = static_cast<std::uint64_t>(order);
  std::uint64_t candidate = list.empty() ? (((1ull << 31) - 1) / n) * n + 1 : list.back().field.p();
  while (static_cast<int>(list.size()) < count + skip) {
    do {
      candidate -= n;
    } while (candidate > 2 && !is_prime(candidate));
    if (candidate <= 2) throw std::runtime_error("ran out of primes");
    PrimeField f(static_cast<std::uint32_t>(candidate));
    list.push_back({f, primitive_root_of_unity(f, order), order});
  }
  return {list.begin() + skip, list.begin() + skip + count};
}

int rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, const PrimeField& f) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto& pr = rows[rank];
    const std::uint32_t inv = f.inverse(pr[c]);
    for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto& r = rows[i];
      const std::uint32_t factor = r[c];
      if (factor == 0) continue;
      const std::uint32_t neg = f.p() - factor;
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j]) r[j] = f.reduce(r[j] + static_cast<std::uint64_t>(neg) * pr[j]);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace arrkit
