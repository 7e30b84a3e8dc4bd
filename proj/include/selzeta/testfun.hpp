#pragma once

// The trace-formula test function pair:
//
//   g(u) = u e^{-(s+l/2-1/2)|u|} / (2 sinh(lu/2)) - (1/l) e^{-(s+l/2-1/2)|u|}
//
// (Re s > 1-l, g(0) = 0) with Fourier transform h(r) = phi_s(r) + phi_s(-r),
//
//   phi_s(r) = sum_{m>=0} { 1/A_m^2 - (1/l)(1/B_m) + (1/l)(1/C_m) }
//            = -(l^2/4) sum_{m>=0} 1/(A_m^2 B_m C_m),
//
//   A_m = s + lm + l - 1/2 + ir,  B_m = s + lm + l/2 - 1/2 + ir,  C_m = B_{m+1}.
//
// phi_s evaluates the triple-product form term by term up to M and resums
// the analytic tail exactly: sum_{m>=M} 1/A_m^2 = l^{-2} zeta(2, A_M/l) and
// the 1/B - 1/C part telescopes to -(1/l)/B_M. The closed series form
// (M = 0, pure zeta + telescope) is exposed separately so the two routes can
// be compared. Also here: the reflection identity residual
//
//   phi_s(r)+phi_s(-r)+phi_{1-l-s}(r)+phi_{1-l-s}(-r)
//     = (pi/l)^2 [ csc^2(pi(s-1/2-ir)/l) + csc^2(pi(s-1/2+ir)/l) ].

#include "selzeta/numcore.hpp"

namespace selzeta {

// g(u) for real u; s complex with Re s > 1 - l.
inline Cplx test_g(const Real& u, const Cplx& s, long l, mpfr_prec_t wp) {
  if (l < 1) throw DomainError("test_g: l must be >= 1");
  if (!(s.re.to_double() > 1.0 - static_cast<double>(l)))
    throw DomainError("test_g: requires Re s > 1 - l");
  if (u.is_zero()) return Cplx(Real(wp), Real(wp));
  Cplx c = s + Real::ratio(l, 2, wp) - Real::of(0.5, wp);
  Cplx damp = exp(-1L * c * Cplx::of(abs(u)));
  Real sh = sinh(Real::ratio(l, 2, wp) * u);
  return damp * (Cplx::of(u / (2L * sh)) - Real::ratio(1, l, wp));
}

namespace detail {

inline void phi_pole_guard(const Cplx& w) {
  if (abs(w) < Real::pow2(-(w.prec() / 2), w.prec()))
    throw PoleError("phi_s: argument hits a pole of the summand");
}

}  // namespace detail

// Triple-product evaluation with exact tail resummation.
inline Cplx phi_s(const Cplx& s, const Cplx& r, long l, mpfr_prec_t wp) {
  if (l < 1) throw DomainError("phi_s: l must be >= 1");
  Cplx ir(-r.im, r.re);  // i*r
  Cplx b0 = s + ir + Real::ratio(l, 2, wp) - Real::of(0.5, wp);  // B_0
  // M large enough that Re(A_M) >= 1
  double reb = b0.re.to_double();
  long M = 24;
  double need = 1.0 - (reb + 0.5 * l);
  if (need > 0) M += static_cast<long>(std::ceil(need / l)) + 4;
  Real half_l = Real::ratio(l, 2, wp);
  Cplx acc(wp);
  Real quarter_l2 = Real::ratio(l * l, 4, wp);
  for (long m = 0; m < M; ++m) {
    Cplx b = b0 + l * m;
    Cplx a = b + half_l;
    Cplx cc = b + l;
    detail::phi_pole_guard(a);
    detail::phi_pole_guard(b);
    detail::phi_pole_guard(cc);
    acc -= Cplx::of(quarter_l2) / (a * a * b * cc);
  }
  // tail
  Cplx bM = b0 + l * M;
  Cplx aM = bM + half_l;
  detail::phi_pole_guard(bM);
  Cplx tail = hurwitz_zeta_cx(Cplx::of(2.0, 0.0, wp), aM / l, wp) /
                  Real::of(l * l, wp) -
              (1L / (Real::of(l, wp) * bM));
  return acc + tail;
}

// Closed series form: l^{-2} zeta(2, A_0/l) - (1/l)/B_0.
inline Cplx phi_s_closed(const Cplx& s, const Cplx& r, long l, mpfr_prec_t wp) {
  Cplx ir(-r.im, r.re);
  Cplx b0 = s + ir + Real::ratio(l, 2, wp) - Real::of(0.5, wp);
  Cplx a0 = b0 + Real::ratio(l, 2, wp);
  detail::phi_pole_guard(b0);
  Cplx tail = hurwitz_zeta_cx(Cplx::of(2.0, 0.0, wp), a0 / l, wp) / Real::of(l * l, wp) -
              (1L / (Real::of(l, wp) * b0));
  return tail;
}

// h(r) = phi_s(r) + phi_s(-r).
inline Cplx h_of_r(const Cplx& s, const Cplx& r, long l, mpfr_prec_t wp) {
  return phi_s(s, r, l, wp) + phi_s(s, -r, l, wp);
}

// |LHS - RHS| of the reflection identity at (s, r).
inline Real reflection_identity_residual(const Cplx& s, const Cplx& r, long l,
                                         mpfr_prec_t wp) {
  Cplx lhs = h_of_r(s, r, l, wp) + h_of_r(1L - l - s, r, l, wp);
  Real pi = Real::pi(wp);
  Cplx ir(-r.im, r.re);
  Cplx zm = (s - Real::of(0.5, wp) - ir) * (pi / l);
  Cplx zp = (s - Real::of(0.5, wp) + ir) * (pi / l);
  Cplx sm = sin(zm);
  Cplx sp = sin(zp);
  detail::phi_pole_guard(sm);
  detail::phi_pole_guard(sp);
  Real pl2 = (pi / l) * (pi / l);
  Cplx rhs = Cplx::of(pl2) * (1L / (sm * sm) + 1L / (sp * sp));
  return abs(lhs - rhs);
}

}  // namespace selzeta
