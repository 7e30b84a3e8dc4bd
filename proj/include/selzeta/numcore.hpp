#pragma once

// Foundational special functions on the complex plane at extended precision:
// log Gamma (shifted Stirling), digamma, Hurwitz zeta (Euler-Maclaurin with
// precision-driven shift/order), Riemann zeta, von Mangoldt, and the constant
// block (gamma, zeta'(0), zeta'(-1), log A) every later module consumes.
//
// Truncation policy: a computation at working precision wp shifts its
// argument until the expansion point x is large enough (~0.55*wp for
// Euler-Maclaurin, ~0.35*wp for Stirling), then adds Bernoulli corrections
// while they decrease and exceed 2^-(wp+10) relative to the result scale.
// If the asymptotic terms stall first, the shift target grows by half and
// the evaluation restarts, so any fixed argument converges without tuning.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "selzeta/complex.hpp"
#include "selzeta/errors.hpp"
#include "selzeta/prec.hpp"

namespace selzeta {

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact, cached.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<mpq_class>& bernoulli_cache() {
  static std::vector<mpq_class> cache;  // cache[m] = B_m
  return cache;
}
inline std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

// Extends the cache through index n via sum_{j<=m} C(m+1,j) B_j = 0.
inline void bernoulli_ensure(size_t n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex());
  auto& b = bernoulli_cache();
  if (b.size() > n) return;
  if (b.empty()) b.push_back(mpq_class(1));
  for (size_t m = b.size(); m <= n; ++m) {
    mpq_class acc(0);
    mpz_class binom(1);  // C(m+1, 0)
    for (size_t j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom *= static_cast<unsigned long>(m + 1 - j);
      binom /= static_cast<unsigned long>(j + 1);
    }
    b.push_back(-acc / mpz_class(static_cast<unsigned long>(m + 1)));
  }
}

}  // namespace detail

inline Real bernoulli(unsigned j, mpfr_prec_t wp) {
  detail::bernoulli_ensure(j);
  Real r(wp);
  std::lock_guard<std::mutex> lock(detail::bernoulli_mutex());
  mpfr_set_q(r.raw(), detail::bernoulli_cache()[j].get_mpq_t(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Primes / von Mangoldt.
// ---------------------------------------------------------------------------

namespace detail {
inline const std::vector<long>& primes_upto(long limit) {
  static std::vector<long> primes;
  static long sieved = 0;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  if (limit > sieved) {
    long n = std::max(limit, 1l << 10);
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    primes.clear();
    for (long p = 2; p <= n; ++p) {
      if (!comp[p]) {
        primes.push_back(p);
        for (long q = p * p; q <= n && q > 0; q += p) comp[q] = true;
      }
    }
    sieved = n;
  }
  return primes;
}
}  // namespace detail

// Primes up to `limit`, cached (the cache only grows).
inline std::vector<long> primes_below(long limit) {
  const auto& all = detail::primes_upto(limit);
  std::vector<long> out;
  for (long p : all) {
    if (p > limit) break;
    out.push_back(p);
  }
  return out;
}

// p if n = p^k for a prime p, else nullopt. Trial division; fine to ~1e12.
inline std::optional<long> prime_power_base(long n) {
  if (n < 2) return std::nullopt;
  long p = 0;
  long m = n;
  for (long d : detail::primes_upto(1l << 16)) {
    if (static_cast<long long>(d) * d > m) break;
    if (m % d == 0) { p = d; break; }
  }
  if (p == 0) return n;  // prime: no factor below sqrt(n)
  while (m % p == 0) m /= p;
  if (m == 1) return p;
  return std::nullopt;
}

// Lambda(n): log p on prime powers, 0 elsewhere.
inline Real von_mangoldt(long n, mpfr_prec_t wp) {
  if (n < 1) throw DomainError("von_mangoldt: n must be >= 1");
  auto p = prime_power_base(n);
  if (!p) return Real(wp);
  return log(Real::of(*p, wp));
}

// ---------------------------------------------------------------------------
// log Gamma, digamma.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_nonpositive_integer(const Cplx& z) {
  return z.im.is_zero() && z.re.is_integer() && z.re <= 0.0;
}

// Shift count so z+n sits in the Stirling cone: |z+n| >= target and
// Re(z+n) dominates |Im| enough to keep the error factor tame.
inline long stirling_shift(const Cplx& z, double target) {
  double re = z.re.to_double();
  double im_abs = std::fabs(z.im.to_double());
  double need = std::max({target, 2.0, 0.7 * im_abs});
  if (re >= need) return 0;
  return static_cast<long>(std::ceil(need - re));
}

}  // namespace detail

// Analytic log Gamma via argument shift + Stirling series. The result is a
// logarithm of Gamma(z) assembled from principal logs; identity checks
// compare exp() of such sums and fractional powers re-extract a principal
// log from the value, so additive 2*pi*i offsets are immaterial.
inline Cplx log_gamma(const Cplx& z, mpfr_prec_t wp) {
  if (detail::is_nonpositive_integer(z))
    throw PoleError("log_gamma: pole at nonpositive integer", 1);
  double base_target = 0.35 * static_cast<double>(wp);
  for (int attempt = 0; attempt < 10; ++attempt) {
    long n = detail::stirling_shift(z, base_target * (1.0 + 0.5 * attempt));
    Cplx w = z + n;
    Cplx w2 = w * w;
    Cplx wpow = 1L / w;  // w^{-(2j-1)}
    Cplx tail(wp);
    long target_exp = -(wp + 10);
    long prev_exp = mpfr_get_emax();
    bool done = false;
    for (unsigned j = 1; j < 4096; ++j) {
      Cplx term = wpow * (bernoulli(2 * j, wp) / static_cast<long>(2 * j * (2 * j - 1)));
      long e = abs(term).exp2();
      if (e < target_exp) { tail += term; done = true; break; }
      if (e >= prev_exp) break;  // asymptotic series stalled: shift more
      prev_exp = e;
      tail += term;
      wpow = wpow / w2;
    }
    if (!done) continue;
    Cplx lg = (w - Real::of(0.5, wp)) * log(w) - w +
              Real::of(0.5, wp) * log(2L * Real::pi(wp)) + tail;
    for (long i = 0; i < n; ++i) lg -= log(z + i);
    return lg;
  }
  throw DomainError("log_gamma: no convergence (argument too extreme)");
}

inline Cplx gamma_fn(const Cplx& z, mpfr_prec_t wp) { return exp(log_gamma(z, wp)); }

// psi(z) = d/dz log Gamma(z).
inline Cplx digamma(const Cplx& z, mpfr_prec_t wp) {
  if (detail::is_nonpositive_integer(z))
    throw PoleError("digamma: pole at nonpositive integer", 1);
  double base_target = 0.35 * static_cast<double>(wp);
  for (int attempt = 0; attempt < 10; ++attempt) {
    long n = detail::stirling_shift(z, base_target * (1.0 + 0.5 * attempt));
    Cplx w = z + n;
    Cplx w2 = w * w;
    Cplx wpow = 1L / w2;  // w^{-2j}
    Cplx tail(wp);
    long target_exp = -(wp + 10);
    long prev_exp = mpfr_get_emax();
    bool done = false;
    for (unsigned j = 1; j < 4096; ++j) {
      Cplx term = wpow * (bernoulli(2 * j, wp) / static_cast<long>(2 * j));
      long e = abs(term).exp2();
      if (e < target_exp) { tail += term; done = true; break; }
      if (e >= prev_exp) break;
      prev_exp = e;
      tail += term;
      wpow = wpow / w2;
    }
    if (!done) continue;
    Cplx ps = log(w) - 1L / (2L * w) - tail;
    for (long i = 0; i < n; ++i) ps -= 1L / (z + i);
    return ps;
  }
  throw DomainError("digamma: no convergence");
}

// ---------------------------------------------------------------------------
// Hurwitz zeta.
// ---------------------------------------------------------------------------

namespace detail {

// Euler-Maclaurin evaluation of zeta(s, a) for complex s and complex a off
// the nonpositive integers. For Re(a) <= 0 the finitely many shifted terms
// use principal powers (the standard continuation in a). With subtract_pole
// the analytic function zeta(s,a) - 1/(s-1) is computed instead, valid at
// s = 1 as well (the pole lives entirely in the x^{1-s}/(s-1) term).
inline Cplx hurwitz_em(const Cplx& s, const Cplx& a, mpfr_prec_t wp,
                       bool subtract_pole = false) {
  double base_target = 0.55 * static_cast<double>(wp);
  for (int attempt = 0; attempt < 10; ++attempt) {
    double target = std::max(16.0, base_target * (1.0 + 0.5 * attempt));
    long M = 0;
    {
      double re_a = a.re.to_double();
      if (re_a < target) M = static_cast<long>(std::ceil(target - re_a));
    }
    // main sum: sum_{n=0}^{M-1} (a+n)^{-s}
    Cplx msum(wp);
    Cplx minus_s = -s;
    for (long n = 0; n < M; ++n) {
      Cplx base = a + n;
      if (base.re.is_zero() && base.im.is_zero())
        throw DomainError("hurwitz_zeta: a at a nonpositive integer");
      msum += exp(minus_s * log(base));
    }
    Cplx x = a + M;
    Cplx x_pow_ms = exp(minus_s * log(x));  // x^{-s}
    Cplx x1ms = x_pow_ms * x;               // x^{1-s}
    Cplx sm1 = s - 1L;
    Cplx lead(wp);
    if (!subtract_pole) {
      lead = x1ms / sm1 + x_pow_ms * Real::of(0.5, wp);
    } else {
      // (x^{1-s} - 1)/(s-1) = -log x * (e^u - 1)/u with u = (1-s) log x
      Cplx lx = log(x);
      Cplx u = (1L - s) * lx;
      Cplx euler1(wp);  // (e^u - 1)/u
      if (abs(u) > 0.5) {
        euler1 = (exp(u) - 1L) / u;
      } else {
        Cplx upow = Cplx::of(1.0, 0.0, wp);
        Real kfac = Real::of(1, wp);
        for (long k = 0; k < 4 * static_cast<long>(wp); ++k) {
          Cplx term = upow / Cplx::of(kfac);
          euler1 += term;
          if (abs(term).exp2() < -(wp + 10)) break;
          upow *= u;
          kfac *= (k + 2);
        }
      }
      lead = -1L * lx * euler1 + x_pow_ms * Real::of(0.5, wp);
    }
    // Bernoulli block: T_j = B_{2j} * C_j, C_j = (s)_{2j-1} x^{-s-2j+1}/(2j)!
    // C_1 = s x^{-s-1}/2;  C_{j+1} = C_j (s+2j-1)(s+2j) / ((2j+1)(2j+2) x^2).
    Cplx inv_x2 = 1L / (x * x);
    Cplx c = s * x_pow_ms / x / 2L;
    Real scale = max(max(abs(msum), abs(lead)), Real::pow2(-wp, wp));
    long target_exp = scale.exp2() - (wp + 10);
    Cplx tail(wp);
    long prev_exp = mpfr_get_emax();
    bool done = false;
    for (unsigned j = 1; j < 4096; ++j) {
      Cplx term = bernoulli(2 * j, wp) * c;
      long e = abs(term).exp2();
      if (e < target_exp) { tail += term; done = true; break; }
      if (e >= prev_exp) break;
      prev_exp = e;
      tail += term;
      c = c * (s + static_cast<long>(2 * j - 1)) * (s + static_cast<long>(2 * j)) * inv_x2 /
          static_cast<long>((2 * j + 1) * (2 * j + 2));
    }
    if (!done) continue;
    return msum + lead + tail;
  }
  throw DomainError("hurwitz_zeta: no convergence");
}

}  // namespace detail

// zeta(s, a) for complex s and complex a (a off the nonpositive real axis,
// or real positive). Throws PoleAtOne at s = 1.
inline Cplx hurwitz_zeta_cx(const Cplx& s, const Cplx& a, mpfr_prec_t wp) {
  Real one_dist = abs(s - 1L);
  if (one_dist < Real::pow2(-(wp / 2), wp)) throw PoleAtOne();
  if (a.im.is_zero() && a.re.is_integer() && a.re <= 0.0)
    throw DomainError("hurwitz_zeta: a must avoid nonpositive integers");
  return detail::hurwitz_em(s, a, wp);
}

// Public contract: real a > 0.
inline Cplx hurwitz_zeta(const Cplx& s, const Real& a, mpfr_prec_t wp) {
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");
  return hurwitz_zeta_cx(s, Cplx::of(a), wp);
}

// zeta(s, a) - 1/(s-1): analytic at s = 1. Used where a character sum
// cancels the pole termwise.
inline Cplx hurwitz_zeta_reg(const Cplx& s, const Cplx& a, mpfr_prec_t wp) {
  if (a.im.is_zero() && a.re.is_integer() && a.re <= 0.0)
    throw DomainError("hurwitz_zeta: a must avoid nonpositive integers");
  return detail::hurwitz_em(s, a, wp, /*subtract_pole=*/true);
}

inline Cplx riemann_zeta(const Cplx& s, mpfr_prec_t wp) {
  return hurwitz_zeta_cx(s, Cplx::of(1.0, 0.0, wp), wp);
}

// ---------------------------------------------------------------------------
// zeta with derivative at real s (jet arithmetic through Euler-Maclaurin).
// ---------------------------------------------------------------------------

struct RealJet {
  Real val, der;  // f(s), f'(s)
  RealJet(Real v, Real d) : val(std::move(v)), der(std::move(d)) {}
  explicit RealJet(mpfr_prec_t wp) : val(wp), der(wp) {}
};

// (zeta(s), zeta'(s)) for real s != 1.
inline RealJet zeta_jet(const Real& s_in, mpfr_prec_t wp) {
  Real s = s_in;
  if (abs(s - 1L) < Real::pow2(-(wp / 2), wp)) throw PoleAtOne();
  double base_target = 0.55 * static_cast<double>(wp);
  for (int attempt = 0; attempt < 10; ++attempt) {
    double target = std::max(16.0, base_target * (1.0 + 0.5 * attempt));
    long M = static_cast<long>(std::ceil(target));
    RealJet sum(wp);
    for (long n = 1; n <= M; ++n) {
      Real ln = log(Real::of(n, wp));
      Real nv = exp(-(s * ln));  // n^{-s}
      sum.val += nv;
      sum.der -= ln * nv;
    }
    Real x = Real::of(M + 1, wp);
    Real lx = log(x);
    Real x_ms = exp(-(s * lx));  // x^{-s}
    Real x1ms = x_ms * x;
    Real sm1 = s - 1L;
    // x^{1-s}/(s-1): value and s-derivative.
    Real lead_v = x1ms / sm1;
    Real lead_d = -lx * lead_v - lead_v / sm1;
    Real half_v = x_ms * 0.5;
    Real half_d = -lx * half_v;
    // Bernoulli block with jets: C_j as in hurwitz_em.
    Real inv_x2 = 1L / (x * x);
    RealJet c(s * x_ms / x / 2L, (1L - s * lx) * (x_ms / x) / 2L);
    Real scale = max(max(abs(sum.val), abs(lead_v)), Real::pow2(-wp, wp));
    long target_exp = scale.exp2() - (wp + 10);
    RealJet tail(wp);
    long prev_exp = mpfr_get_emax();
    bool done = false;
    for (unsigned j = 1; j < 4096; ++j) {
      Real b = bernoulli(2 * j, wp);
      Real tv = b * c.val;
      Real td = b * c.der;
      // the Pochhammer can vanish at nonpositive integer s while its
      // derivative does not; gate on both magnitudes
      long e = std::max(abs(tv).exp2(), abs(td).exp2());
      if (e < target_exp) { tail.val += tv; tail.der += td; done = true; break; }
      if (e >= prev_exp) break;
      prev_exp = e;
      tail.val += tv;
      tail.der += td;
      // c *= (s+2j-1)(s+2j) inv_x2 / ((2j+1)(2j+2)); d(x^{-2})/ds = 0.
      Real f1 = s + static_cast<long>(2 * j - 1);
      Real f2 = s + static_cast<long>(2 * j);
      Real nv = c.val * f1 * f2;
      Real nd = c.der * f1 * f2 + c.val * (f1 + f2);
      long den = static_cast<long>((2 * j + 1) * (2 * j + 2));
      c.val = nv * inv_x2 / den;
      c.der = nd * inv_x2 / den;
    }
    if (!done) continue;
    return RealJet(sum.val + lead_v + half_v + tail.val,
                   sum.der + lead_d + half_d + tail.der);
  }
  throw DomainError("zeta_jet: no convergence");
}

// ---------------------------------------------------------------------------
// Constants.
// ---------------------------------------------------------------------------

struct Constants {
  Real euler_gamma;   // gamma
  Real log_glaisher;  // log A = 1/12 - zeta'(-1)
  Real zeta_prime_0;  // zeta'(0) = -(1/2) log(2 pi)
  Real zeta_prime_m1; // zeta'(-1)
  Real pi;
  Real log_2pi;

  explicit Constants(mpfr_prec_t wp)
      : euler_gamma(wp), log_glaisher(wp), zeta_prime_0(wp), zeta_prime_m1(wp),
        pi(wp), log_2pi(wp) {}
};

namespace detail {
inline const Constants& constants_at(mpfr_prec_t wp) {
  static std::map<mpfr_prec_t, Constants> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(wp);
  if (it != cache.end()) return it->second;
  Constants c(wp);
  c.pi = Real::pi(wp);
  c.log_2pi = log(2L * c.pi);
  c.euler_gamma = Real::euler_gamma(wp);
  c.zeta_prime_0 = zeta_jet(Real::of(0.0, wp), wp).der;
  c.zeta_prime_m1 = zeta_jet(Real::of(-1.0, wp), wp).der;
  c.log_glaisher = Real::ratio(1, 12, wp) - c.zeta_prime_m1;
  return cache.emplace(wp, std::move(c)).first->second;
}
}  // namespace detail

inline const Constants& constants(const PrecisionContext& ctx) {
  return detail::constants_at(ctx.wprec());
}
inline const Constants& constants_wp(mpfr_prec_t wp) { return detail::constants_at(wp); }

}  // namespace selzeta
