#pragma once

// Vigneras-normalized Barnes double and triple gamma functions.
//
//   1/Gamma2(y+1) = exp{(-1/2-g/2)y^2 + (-1/2-zeta'(0))y}
//                   prod_k (1+y/k)^k exp(-y + y^2/(2k))
//   Gamma3(y+1)   = exp{(-1/4-g/6)y^3 + (1/8-zeta'(0)/2+g/4)y^2
//                        + (7/24+zeta'(-1)+zeta'(0)/2)y}
//                   prod_k (1+y/k)^{-k(k+1)/2}
//                   exp{y^3/(6k) + (-1/4-1/(4k))y^2 + (1/2+k/2)y}
//
// with Gamma2(z+1) = Gamma2(z)/Gamma(z), Gamma3(z+1) = Gamma3(z)/Gamma2(z),
// Gamma2(1) = Gamma3(1) = 1.
//
// Evaluation: reduce into the strip 0 < Re z <= 1 by the recurrences, sum the
// log-product directly up to K = 2^ceil(log2 max(32, 4|y|)) and resum the
// analytic tail as a power series in y whose coefficients are Hurwitz zeta
// values zeta(j-1, K+1) / zeta(j-2, K+1), truncated once the terms drop below
// 2^-(wp+10). The zeta coefficient vectors are cached per (K, wp).

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "selzeta/numcore.hpp"
#include "selzeta/rat.hpp"

namespace selzeta {

enum class MultiGammaOrder { Gamma1 = 1, Gamma2 = 2, Gamma3 = 3 };

namespace detail {

// zeta(j, K+1) for j = 2..n, cached.
inline Real zeta_int_tail(long j, long K, mpfr_prec_t wp) {
  static std::map<std::pair<long, long>, std::vector<Real>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto& vec = cache[{K, wp}];
  while (static_cast<long>(vec.size()) + 2 <= j) {
    long jj = static_cast<long>(vec.size()) + 2;
    vec.push_back(
        hurwitz_zeta_cx(Cplx::of(static_cast<double>(jj), 0.0, wp),
                        Cplx::of(static_cast<double>(K + 1), 0.0, wp), wp)
            .re);
  }
  return vec[static_cast<size_t>(j - 2)];
}

inline long product_cutoff(const Cplx& y) {
  double m = 4.0 * abs(y).to_double();
  long k = 32;
  while (k < m) k <<= 1;
  return k;
}

// log of the Weierstrass part of 1/Gamma2(y+1): sum over k of
// k log(1+y/k) - y + y^2/(2k), tail-resummed past K.
inline Cplx gamma2_product_log(const Cplx& y, mpfr_prec_t wp) {
  long K = product_cutoff(y);
  Cplx sum(wp);
  Cplx y2 = y * y;
  for (long k = 1; k <= K; ++k) {
    sum += static_cast<long>(k) * log(1L + y / k) - y + y2 / (2 * k);
  }
  // tail: sum_{j>=3} (-1)^{j-1} y^j zeta(j-1, K+1) / j
  Cplx ypow = y * y2;  // y^j, j=3
  long target_exp = -(wp + 10);
  for (long j = 3; j < 100000; ++j) {
    Cplx term = ypow * (zeta_int_tail(j - 1, K, wp) / static_cast<long>(j));
    if (j % 2 == 0) term = -term;
    sum += term;
    if (abs(term).exp2() < target_exp) break;
    ypow *= y;
  }
  return sum;
}

// log of the Weierstrass part of Gamma3(y+1).
inline Cplx gamma3_product_log(const Cplx& y, mpfr_prec_t wp) {
  long K = product_cutoff(y);
  Cplx sum(wp);
  Cplx y2 = y * y;
  Cplx y3 = y2 * y;
  Real quarter = Real::ratio(1, 4, wp);
  Real half = Real::ratio(1, 2, wp);
  for (long k = 1; k <= K; ++k) {
    Cplx lg = log(1L + y / k);
    sum += Real::of(-(k * (k + 1)) / 2, wp) * lg + y3 / (6 * k) -
           (quarter + Real::ratio(1, 4 * k, wp)) * y2 + (half + Real::ratio(k, 2, wp)) * y;
  }
  // tail: -(y^3/6) zeta(2,K+1) + sum_{j>=4} (-1)^j y^j
  //        [zeta(j-2,K+1)+zeta(j-1,K+1)] / (2j)
  sum -= y3 * (zeta_int_tail(2, K, wp) / 6L);
  Cplx ypow = y2 * y2;  // y^4
  long target_exp = -(wp + 10);
  for (long j = 4; j < 100000; ++j) {
    Cplx term = ypow * ((zeta_int_tail(j - 2, K, wp) + zeta_int_tail(j - 1, K, wp)) /
                        static_cast<long>(2 * j));
    if (j % 2 == 1) term = -term;
    sum += term;
    if (abs(term).exp2() < target_exp) break;
    ypow *= y;
  }
  return sum;
}

}  // namespace detail

inline long pole_order(MultiGammaOrder level, const Rat& z0) {
  if (!z0.is_integer() || z0.num > 0) return 0;
  long n = -z0.num;
  switch (level) {
    case MultiGammaOrder::Gamma1: return 1;
    case MultiGammaOrder::Gamma2: return n + 1;
    case MultiGammaOrder::Gamma3: return (n + 1) * (n + 2) / 2;
  }
  return 0;
}

// log Gamma2(z), Vigneras normalization.
inline Cplx log_gamma2(const Cplx& z, mpfr_prec_t wp) {
  if (detail::is_nonpositive_integer(z)) {
    long n = -z.re.to_long();
    throw PoleError("log_gamma2: pole at nonpositive integer",
                    static_cast<int>(n + 1));
  }
  const Constants& c = constants_wp(wp);
  Cplx w = z;
  Cplx adjust(wp);
  while (w.re > 1.0) {
    w -= 1L;
    adjust -= log_gamma(w, wp);
  }
  while (!(w.re > 0.0)) {
    adjust += log_gamma(w, wp);
    w += 1L;
  }
  Cplx y = w - 1L;
  Cplx quad = (Real::of(-0.5, wp) - c.euler_gamma * 0.5) * (y * y) +
              (Real::of(-0.5, wp) - c.zeta_prime_0) * y;
  Cplx core = -1L * (quad + detail::gamma2_product_log(y, wp));
  return core + adjust;
}

// log Gamma3(z).
inline Cplx log_gamma3(const Cplx& z, mpfr_prec_t wp) {
  if (detail::is_nonpositive_integer(z)) {
    long n = -z.re.to_long();
    throw PoleError("log_gamma3: pole at nonpositive integer",
                    static_cast<int>((n + 1) * (n + 2) / 2));
  }
  const Constants& c = constants_wp(wp);
  Cplx w = z;
  Cplx adjust(wp);
  while (w.re > 1.0) {
    w -= 1L;
    adjust -= log_gamma2(w, wp);
  }
  while (!(w.re > 0.0)) {
    adjust += log_gamma2(w, wp);
    w += 1L;
  }
  Cplx y = w - 1L;
  Real c3 = Real::ratio(-1, 4, wp) - c.euler_gamma / 6L;
  Real c2 = Real::ratio(1, 8, wp) - c.zeta_prime_0 * 0.5 + c.euler_gamma * 0.25;
  Real c1 = Real::ratio(7, 24, wp) + c.zeta_prime_m1 + c.zeta_prime_0 * 0.5;
  Cplx cubic = Cplx::of(c3) * (y * y * y) + Cplx::of(c2) * (y * y) + Cplx::of(c1) * y;
  Cplx core = cubic + detail::gamma3_product_log(y, wp);
  return core + adjust;
}

inline Cplx gamma2_fn(const Cplx& z, mpfr_prec_t wp) { return exp(log_gamma2(z, wp)); }
inline Cplx gamma3_fn(const Cplx& z, mpfr_prec_t wp) { return exp(log_gamma3(z, wp)); }

// Multiplication-formula constants. log k1(m) = -((m-1)/2) log 2pi - (1/2) log m,
// log k2(m) = (1-m^2) log A + (m^2-1)/12 - ((m-1)/2) log 2pi - (5/12) log m.
inline Real log_k1(long m, mpfr_prec_t wp) {
  if (m < 1) throw DomainError("mult_constants: m must be >= 1");
  const Constants& c = constants_wp(wp);
  Real lm = log(Real::of(m, wp));
  return Real::ratio(-(m - 1), 2, wp) * c.log_2pi - lm * 0.5;
}

inline Real log_k2(long m, mpfr_prec_t wp) {
  if (m < 1) throw DomainError("mult_constants: m must be >= 1");
  const Constants& c = constants_wp(wp);
  Real lm = log(Real::of(m, wp));
  return Real::of(1 - m * m, wp) * c.log_glaisher + Real::ratio(m * m - 1, 12, wp) +
         Real::ratio(-(m - 1), 2, wp) * c.log_2pi - lm * Real::ratio(5, 12, wp);
}

struct MultConstants {
  Real k1, k2;
};

inline MultConstants mult_constants(long m, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  return MultConstants{exp(log_k1(m, wp)), exp(log_k2(m, wp))};
}

// Relative residual of the Gauss-Legendre (level 1) or double-gamma (level 2)
// multiplication formula at z. Computed as |1 - exp(log RHS - log LHS)| so
// additive 2 pi i log offsets cancel.
inline Real mult_residual(MultiGammaOrder level, const Cplx& z, long m,
                          const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  if (m < 1) throw DomainError("mult_residual: m must be >= 1");
  Real lm = log(Real::of(m, wp));
  if (level == MultiGammaOrder::Gamma1) {
    Cplx lhs = log_gamma(z, wp);
    Cplx rhs = Cplx::of(log_k1(m, wp)) + z * lm;
    for (long j = 0; j < m; ++j) rhs += log_gamma((z + j) / m, wp);
    return abs(1L - exp(rhs - lhs));
  }
  if (level == MultiGammaOrder::Gamma2) {
    const Constants& c = constants_wp(wp);
    Cplx lhs = log_gamma2(z, wp);
    Cplx rhs = Cplx::of(log_k2(m, wp)) + Real::ratio(m - 1, 2, wp) * c.log_2pi * z +
               (z - z * z * 0.5) * lm;
    for (long j1 = 0; j1 < m; ++j1)
      for (long j2 = 0; j2 < m; ++j2) rhs += log_gamma2((z + j1 + j2) / m, wp);
    return abs(1L - exp(rhs - lhs));
  }
  throw UnsupportedError("mult_residual: no multiplication formula for Gamma3");
}

// Residual of the product identity
//   prod_{r<l} Gamma2((z+r)/l)^{2l} Gamma((z+r)/l)^{2r-2l+1}
//     = k2(l)^{-2} k1(l) (2pi)^{-lz} l^{z^2-z} (2pi)^z Gamma2(z)^2 / Gamma(z).
inline Real dgamma_product_residual(long l, const Cplx& z, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  const Constants& c = constants_wp(wp);
  Cplx lhs(wp);
  for (long r = 0; r < l; ++r) {
    Cplx a = (z + r) / l;
    lhs += 2L * l * log_gamma2(a, wp) + static_cast<long>(2 * r - 2 * l + 1) * log_gamma(a, wp);
  }
  Real ll = log(Real::of(l, wp));
  Cplx rhs = Cplx::of(-2L * log_k2(l, wp) + log_k1(l, wp)) - Real::of(l, wp) * c.log_2pi * z +
             (z * z - z) * ll + z * c.log_2pi + 2L * log_gamma2(z, wp) - log_gamma(z, wp);
  return abs(1L - exp(rhs - lhs));
}

}  // namespace selzeta
