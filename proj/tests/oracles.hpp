#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: brute-force partial sums with Richardson extrapolation, the
// Cohen-Villegas-Zagier alternating-series accelerator, MPFR's own real
// zeta/gamma, and the real functional equation of zeta.

#include <functional>
#include <vector>

#include "selzeta/real.hpp"

namespace oracles {

using selzeta::Real;

// Richardson extrapolation for S(N) = L + c1/N + c2/N^2 + ... : evaluates S
// at N0*2^j, j = 0..levels, and eliminates the powers of 1/N one at a time.
inline Real richardson_limit(const std::function<Real(long)>& partial, long n0,
                             int levels) {
  std::vector<Real> t;
  for (int j = 0; j <= levels; ++j) t.push_back(partial(n0 << j));
  for (int k = 1; k <= levels; ++k) {
    Real w = Real::pow2(k, t[0].prec());  // 2^k
    for (int j = 0; j + k <= levels; ++j) t[j] = (w * t[j + 1] - t[j]) / (w - 1L);
  }
  return t[0];
}

// sum_{n>=1} 1/n^2 by raw partial sums + Richardson.
inline Real zeta2_brute(mpfr_prec_t wp) {
  auto partial = [wp](long n) {
    Real s(wp);
    for (long k = 1; k <= n; ++k) s += Real::ratio(1, k * k > 0 ? k * k : 0, wp);
    return s;
  };
  return richardson_limit(partial, 1l << 10, 16);
}

// 4 * sum_{n>=0} 1/(2n+1)^2  ( = zeta(2, 1/2) by odd-term splitting).
inline Real zeta2_half_brute(mpfr_prec_t wp) {
  auto partial = [wp](long n) {
    Real s(wp);
    for (long k = 0; k < n; ++k) {
      long odd = 2 * k + 1;
      s += Real::ratio(4, odd * odd, wp);
    }
    return s;
  };
  return richardson_limit(partial, 1l << 10, 16);
}

// Euler's constant from H_N - log N, extrapolated.
inline Real euler_gamma_brute(mpfr_prec_t wp) {
  auto partial = [wp](long n) {
    Real s(wp);
    for (long k = 1; k <= n; ++k) s += Real::ratio(1, k, wp);
    return s - log(Real::of(static_cast<long>(n), wp));
  };
  return richardson_limit(partial, 1l << 10, 16);
}

// Glaisher-Kinkelin limit: sum k log k - (N^2/2 + N/2 + 1/12) log N + N^2/4,
// three-point Richardson in 1/N^2 at N, 2N, 4N.
inline Real log_glaisher_limit(long n0, mpfr_prec_t wp) {
  auto partial = [wp](long n) {
    Real s(wp);
    for (long k = 2; k <= n; ++k) s += Real::of(k, wp) * log(Real::of(k, wp));
    Real nn = Real::of(static_cast<long>(n), wp);
    s -= (nn * nn * 0.5 + nn * 0.5 + Real::ratio(1, 12, wp)) * log(nn);
    s += nn * nn * 0.25;
    return s;
  };
  // error expands in 1/N^2, so eliminate 1/N^2 then 1/N^4
  Real t0 = partial(n0), t1 = partial(2 * n0), t2 = partial(4 * n0);
  Real u0 = (4L * t1 - t0) / 3L;
  Real u1 = (4L * t2 - t1) / 3L;
  return (16L * u1 - u0) / 15L;
}

// Cohen-Villegas-Zagier acceleration for sum_{k>=0} (-1)^k a_k.
inline Real cvz_alternating(const std::function<Real(long, mpfr_prec_t)>& a, int n,
                            mpfr_prec_t wp) {
  Real d = pow(Real::of(3L, wp) + sqrt(Real::of(8L, wp)), static_cast<long>(n));
  d = (d + 1L / d) / 2L;
  Real b = Real::of(-1L, wp);
  Real c = -d;
  Real s(wp);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k, wp);
    b = b * (k + Real::of(static_cast<long>(n), wp)) * (k - Real::of(static_cast<long>(n), wp)) /
        ((k + Real::of(0.5, wp)) * (k + 1L));
  }
  return s / d;
}

// Riemann zeta at real s via the real functional equation,
// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s), all in MPFR reals.
inline Real zeta_functional_eq(double s, mpfr_prec_t wp) {
  Real sr = Real::of(s, wp);
  Real pi = Real::pi(wp);
  Real lhs = pow(Real::of(2L, wp), sr) * pow(pi, sr - 1L) * sin(pi * sr / 2L) *
             real_gamma(1L - sr) * real_zeta(1L - sr);
  return lhs;
}

}  // namespace oracles
