#pragma once

// Zero ordinates of zeta on the critical line. xi(1/2 + it) is real, so
// zeros are located by sign changes on a grid and refined by bisection.
// This backs the bundled ordinate table and the first-zero oracle; it is
// not a general-purpose zero finder (lists for other characters are inputs).

#include <vector>

#include "selzeta/dirichlet.hpp"

namespace selzeta {

// xi(1/2 + i t) as a real number (the imaginary part, which vanishes
// identically, is dropped after a sanity bound).
inline Real xi_on_critical_line(const Real& t, mpfr_prec_t wp) {
  DirichletCharacter chi0(1);
  Cplx s(Real::of(0.5, wp), t);
  Cplx v = xi_complete(s, chi0, wp);
  return v.re;
}

// First `count` ordinates t_n of zeta zeros, scanned with `step` up to
// t_max and bisected to ~2^-(refine_wp/3). Throws if the scan window is
// exhausted before `count` sign changes are found.
inline std::vector<Real> zeta_zero_ordinates(int count, double t_max = 260.0,
                                             double step = 0.05,
                                             mpfr_prec_t scan_wp = 96,
                                             mpfr_prec_t refine_wp = 256) {
  std::vector<Real> out;
  Real t_prev = Real::of(1.0, scan_wp);
  Real f_prev = xi_on_critical_line(t_prev, scan_wp);
  for (double t = 1.0 + step; t <= t_max && static_cast<int>(out.size()) < count;
       t += step) {
    Real t_cur = Real::of(t, scan_wp);
    Real f_cur = xi_on_critical_line(t_cur, scan_wp);
    if (f_prev.sign() * f_cur.sign() < 0) {
      // refine at full precision
      Real lo = Real::of(t - step, refine_wp);
      Real hi = Real::of(t, refine_wp);
      Real flo = xi_on_critical_line(lo, refine_wp);
      int iters = static_cast<int>(refine_wp / 3) + 8;
      for (int i = 0; i < iters; ++i) {
        Real mid = (lo + hi) * 0.5;
        Real fm = xi_on_critical_line(mid, refine_wp);
        if (fm.sign() == 0) { lo = mid; hi = mid; break; }
        if (fm.sign() == flo.sign()) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back((lo + hi) * 0.5);
    }
    t_prev = t_cur;
    f_prev = f_cur;
  }
  if (static_cast<int>(out.size()) < count)
    throw DomainError("zeta_zero_ordinates: scan window exhausted");
  return out;
}

}  // namespace selzeta
