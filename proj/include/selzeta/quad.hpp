#pragma once

// Panel-based Gauss-Legendre quadrature at working precision. Nodes/weights
// are found by Newton iteration on the Legendre recurrence and cached per
// (n, precision). Used by the Fourier-pair verification (the quadrature side
// is deliberately independent of the phi_s closed forms).

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "selzeta/complex.hpp"

namespace selzeta {

struct GaussLegendre {
  std::vector<Real> nodes;    // on (-1, 1)
  std::vector<Real> weights;
};

inline const GaussLegendre& gauss_legendre(int n, mpfr_prec_t wp) {
  static std::map<std::pair<int, mpfr_prec_t>, GaussLegendre> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find({n, wp});
  if (it != cache.end()) return it->second;

  GaussLegendre gl;
  Real pi = Real::pi(wp);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n
    Real x = cos(pi * Real::ratio(4 * i + 3, 4 * n + 2, wp));
    Real dp(wp);
    for (int iter = 0; iter < static_cast<int>(wp); ++iter) {
      // evaluate P_n(x), P_n'(x) by recurrence
      Real p0 = Real::of(1, wp), p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = (Real::of(2 * k - 1, wp) * x * p1 - Real::of(k - 1, wp) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = Real::of(n, wp) * (x * p1 - p0) / (x * x - 1L);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx).exp2() < -(static_cast<long>(wp))) break;
    }
    gl.nodes.push_back(x);
    gl.weights.push_back(2L / ((1L - x * x) * dp * dp));
  }
  return cache.emplace(std::pair{n, wp}, std::move(gl)).first->second;
}

// Integral of f over [a, b] with one n-point panel.
inline Cplx gl_panel(const std::function<Cplx(const Real&)>& f, const Real& a,
                     const Real& b, int n, mpfr_prec_t wp) {
  const GaussLegendre& gl = gauss_legendre(n, wp);
  Real mid = (a + b) * 0.5;
  Real half = (b - a) * 0.5;
  Cplx acc(wp);
  for (size_t i = 0; i < gl.nodes.size(); ++i)
    acc += Cplx::of(gl.weights[i]) * f(mid + half * gl.nodes[i]);
  return acc * half;
}

// Integral over [0, upper] with dyadic panels toward 0 (the integrands here
// are analytic on each open panel but only C^2 at 0) and unit panels beyond.
inline Cplx integrate_dyadic(const std::function<Cplx(const Real&)>& f, double upper,
                             int nodes, mpfr_prec_t wp) {
  Cplx acc(wp);
  // [2^-40, 1] dyadically
  for (int j = 40; j >= 1; --j) {
    Real a = Real::pow2(-j, wp);
    Real b = Real::pow2(-(j - 1), wp);
    acc += gl_panel(f, a, b, nodes, wp);
  }
  // [1, upper] in unit panels
  long u = static_cast<long>(std::ceil(upper));
  for (long k = 1; k < u; ++k)
    acc += gl_panel(f, Real::of(k, wp), Real::of(k + 1, wp), nodes, wp);
  return acc;
}

}  // namespace selzeta
