#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arrkit/cyclotomic.hpp"

namespace arrkit {

/// Z/p with Barrett reduction, p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t reduce(std::uint64_t x) const {
    const std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inverse(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  std::uint64_t m_;
};

/// A prime p = 1 mod n together with an image of zeta_n in Z/p.
struct CycloPrime {
  PrimeField field;
  std::uint32_t zeta;
  int order;

  /// Image of c, or nullopt when p divides a denominator of c.
  std::optional<std::uint32_t> reduce(const CycloNumber& c) const;
};

bool is_prime(std::uint64_t n);

/// An element of exact multiplicative order n; requires n | p - 1.
std::uint32_t primitive_root_of_unity(const PrimeField& f, int n);

/// The `count` largest primes below 2^31 that are 1 mod n, skipping the first
/// `skip` of them.
std::vector<CycloPrime> cyclo_primes(int order, int count, int skip = 0);

/// Rank of a dense matrix over Z/p; the rows are destroyed.
int rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, const PrimeField& f);

}  // namespace arrkit
