#include "arrkit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arrkit/modular.hpp"

namespace arrkit {

int RootSet::found() const {
  int s = 0;
  for (const auto& r : roots) s += r.second;
  return s;
}

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const int n = static_cast<int>(b.size());
  if (n < 2) return;
  auto dot = [](const std::vector<Integer>& u, const std::vector<Integer>& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };
  // Integral LLL with 1-based indices; d[i] are Gram determinants and
  // lambda[k][j] = d[j] * mu[k][j].
  std::vector<Integer> d(n + 1);
  std::vector<std::vector<Integer>> lambda(n + 1, std::vector<Integer>(n + 1));
  auto B = [&](int i) -> std::vector<Integer>& { return b[i - 1]; };
  d[0] = 1;
  d[1] = dot(B(1), B(1));
  int k = 2, kmax = 1;

  auto red = [&](int kk, int l) {
    Integer two = 2 * lambda[kk][l];
    if (abs(two) <= d[l]) return;
    // q = round(lambda / d_l)
    Integer q;
    Integer num = 2 * lambda[kk][l] + d[l];
    Integer den = 2 * d[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t c = 0; c < B(kk).size(); ++c) B(kk)[c] -= q * B(l)[c];
    lambda[kk][l] -= q * d[l];
    for (int i = 1; i < l; ++i) lambda[kk][i] -= q * lambda[l][i];
  };

  auto swap_k = [&](int kk) {
    std::swap(B(kk), B(kk - 1));
    for (int j = 1; j <= kk - 2; ++j) std::swap(lambda[kk][j], lambda[kk - 1][j]);
    const Integer lam = lambda[kk][kk - 1];
    const Integer bb = (d[kk - 2] * d[kk] + lam * lam) / d[kk - 1];
    for (int i = kk + 1; i <= kmax; ++i) {
      const Integer t = lambda[i][kk];
      lambda[i][kk] = (d[kk] * lambda[i][kk - 1] - lam * t) / d[kk - 1];
      lambda[i][kk - 1] = (bb * t + lam * lambda[i][kk]) / d[kk];
    }
    d[kk - 1] = bb;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        Integer u = dot(B(k), B(j));
        for (int i = 1; i < j; ++i) u = (d[i] * u - lambda[k][i] * lambda[j][i]) / d[i - 1];
        if (j < k)
          lambda[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) throw std::invalid_argument("LLL input vectors are dependent");
    }
    red(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lambda[k][k - 1] * lambda[k][k - 1]) {
      swap_k(k);
      k = std::max(2, k - 1);
      continue;
    }
    for (int l = k - 2; l >= 1; --l) red(k, l);
    ++k;
  }
}

namespace {

std::uint64_t small_prime_1_mod(int n, std::uint64_t above) {
  std::uint64_t c = (above / n + 1) * n + 1;
  while (!is_prime(c)) c += n;
  return c;
}

struct PadicContext {
  Integer modulus;                 // p^K
  std::vector<Integer> zeta_pows;  // zeta^k mod p^K, k < phi
};

Integer embed(const CycloNumber& c, const PadicContext& ctx) {
  Integer acc = 0;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    const Rational& q = c.coeffs()[k];
    if (q == 0) continue;
    acc += q.get_num() * ctx.zeta_pows[k];
  }
  mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), ctx.modulus.get_mpz_t());
  return acc;
}

Integer eval_mod(const std::vector<Integer>& h, const Integer& x, const Integer& mod) {
  Integer acc = 0;
  for (std::size_t i = h.size(); i-- > 0;) {
    acc = acc * x + h[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  }
  return acc;
}

// Lifts zeta_p (a root of x^n - 1 mod p) to a root modulo `mod`.
Integer lift_zeta(std::uint64_t zeta_p, int n, const Integer& mod) {
  Integer z = static_cast<unsigned long>(zeta_p);
  for (int iter = 0; iter < 64; ++iter) {
    Integer zn;
    mpz_powm_ui(zn.get_mpz_t(), z.get_mpz_t(), n, mod.get_mpz_t());
    Integer f = zn - 1;
    mpz_mod(f.get_mpz_t(), f.get_mpz_t(), mod.get_mpz_t());
    if (f == 0) return z;
    Integer deriv;
    mpz_powm_ui(deriv.get_mpz_t(), z.get_mpz_t(), n - 1, mod.get_mpz_t());
    deriv *= n;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), mod.get_mpz_t());
    z -= f * inv;
    mpz_mod(z.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
  }
  throw std::logic_error("zeta lift did not converge");
}

Integer lift_root(const std::vector<Integer>& h, const std::vector<Integer>& dh, std::uint64_t r0,
                  const Integer& mod) {
  Integer r = static_cast<unsigned long>(r0);
  for (int iter = 0; iter < 64; ++iter) {
    const Integer v = eval_mod(h, r, mod);
    if (v == 0) return r;
    const Integer dv = eval_mod(dh, r, mod);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t());
    r -= v * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  }
  throw std::logic_error("Hensel lift did not converge");
}

// Small coordinate vectors c with sum c_k zeta^k == r (mod p^K).
std::vector<std::vector<Integer>> reconstruct(const Integer& r, const PadicContext& ctx, int phi) {
  const int dim = phi + 1;
  std::vector<std::vector<Integer>> basis;
  std::vector<Integer> row(dim, 0);
  row[0] = ctx.modulus;
  basis.push_back(row);
  for (int k = 1; k < phi; ++k) {
    std::vector<Integer> v(dim, 0);
    v[0] = ctx.modulus - ctx.zeta_pows[k];
    v[k] = 1;
    basis.push_back(v);
  }
  std::vector<Integer> t(dim, 0);
  t[0] = r;
  t[phi] = 1;
  basis.push_back(t);
  lll_reduce(basis);
  std::vector<std::vector<Integer>> out;
  for (auto& v : basis) {
    if (abs(v[phi]) != 1) continue;
    const int s = v[phi] > 0 ? 1 : -1;
    std::vector<Integer> c(phi);
    for (int k = 0; k < phi; ++k) c[k] = s * v[k];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CycloNumber> squarefree_roots(const UniPoly& g, const RootOptions& opt) {
  const int order = g.field_order();
  const int m = g.degree();
  std::vector<CycloNumber> out;
  if (m <= 0) return out;
  if (m == 1) {
    out.push_back(-(g.coeff(0) / g.coeff(1)));
    return out;
  }
  const UniPoly mg = g.monic();
  const int phi = euler_phi(order);
  Integer D = 1;
  for (const auto& c : mg.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.denominator().get_mpz_t());
  // h(y) = D^m * g(y / D) is monic with coefficients in Z[zeta]; beta = D * alpha.
  std::vector<CycloNumber> hc(m + 1, CycloNumber::zero(order));
  Integer Dpow = 1;
  for (int i = m; i >= 0; --i) {
    hc[i] = mg.coeff(i) * Rational(Dpow);
    Dpow *= D;
  }
  const UniPoly h(hc, order);

  std::uint64_t p = 0;
  std::uint64_t zeta_p = 0;
  std::vector<std::uint64_t> residue_roots;
  std::uint64_t above = std::max<std::uint64_t>(100, 4 * m);
  for (int attempt = 0; attempt < 200; ++attempt) {
    p = small_prime_1_mod(order, above);
    above = p;
    PrimeField f(static_cast<std::uint32_t>(p));
    const CycloPrime cp{f, primitive_root_of_unity(f, order), order};
    std::vector<std::uint32_t> hbar(m + 1);
    for (int i = 0; i <= m; ++i) hbar[i] = *cp.reduce(h.coeff(i));
    auto eval = [&](const std::vector<std::uint32_t>& poly, std::uint32_t x) {
      std::uint32_t acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
      return acc;
    };
    std::vector<std::uint32_t> dbar(m);
    for (int i = 1; i <= m; ++i) dbar[i - 1] = f.mul(hbar[i], static_cast<std::uint32_t>(i % p));
    residue_roots.clear();
    bool simple = true;
    for (std::uint32_t x = 0; x < p && simple; ++x) {
      if (eval(hbar, x) != 0) continue;
      if (eval(dbar, x) == 0) simple = false;
      residue_roots.push_back(x);
    }
    if (simple) {
      zeta_p = cp.zeta;
      break;
    }
    residue_roots.clear();
    p = 0;
  }
  if (p == 0) throw std::runtime_error("no suitable prime for root finding");

  const double log2p = std::log2(static_cast<double>(p));
  for (std::uint64_t r0 : residue_roots) {
    for (int bits = 64 * phi; bits <= std::max(opt.max_bits, 64 * phi); bits *= 2) {
      PadicContext ctx;
      const unsigned long K = static_cast<unsigned long>(std::ceil(bits / log2p));
      mpz_ui_pow_ui(ctx.modulus.get_mpz_t(), p, K);
      const Integer z = lift_zeta(zeta_p, order, ctx.modulus);
      ctx.zeta_pows.push_back(1);
      for (int k = 1; k < phi; ++k) {
        Integer nz = ctx.zeta_pows.back() * z;
        mpz_mod(nz.get_mpz_t(), nz.get_mpz_t(), ctx.modulus.get_mpz_t());
        ctx.zeta_pows.push_back(nz);
      }
      std::vector<Integer> hp(m + 1), dhp(m);
      for (int i = 0; i <= m; ++i) hp[i] = embed(h.coeff(i), ctx);
      for (int i = 1; i <= m; ++i) {
        dhp[i - 1] = hp[i] * i;
        mpz_mod(dhp[i - 1].get_mpz_t(), dhp[i - 1].get_mpz_t(), ctx.modulus.get_mpz_t());
      }
      const Integer r = lift_root(hp, dhp, r0, ctx.modulus);
      bool done = false;
      for (const auto& c : reconstruct(r, ctx, phi)) {
        std::vector<Rational> q(c.begin(), c.end());
        const CycloNumber beta(q, order);
        Rational inv_d = 1;
        inv_d /= D;
        const CycloNumber alpha = beta * inv_d;
        if (g.evaluate(alpha).is_zero()) {
          out.push_back(alpha);
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }
  return out;
}

}  // namespace

RootSet find_roots(const UniPoly& f, const RootOptions& opt) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  RootSet rs;
  rs.degree = f.degree();
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (auto& r : squarefree_roots(g, opt)) rs.roots.emplace_back(std::move(r), mult);
  std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return rs;
}

}  // namespace arrkit
