#pragma once

// Higher Dirichlet L-functions and their completion:
//
//   L_{l,inf}(s,chi)  = prod_{m>=1} L(s+lm, chi)
//   J_l(s)            = k1(l)^{-s/l} l^{-s(s+l)/(4l)}
//                       prod_{r<l} Gamma2((s+2r+l)/(2l)) Gamma2((s+2r+2l)/(2l))
//   xi_{l,inf}(s,chi) = {l^{-2s/l} Gamma((s+l)/l)^{-1} Gamma((s+l-1)/l)^{-1}}^{delta}
//                       (pi/q)^{s(s+l)/(4l)} J_l(s+v) L_{l,inf}(s,chi)
//   theta_{l,inf}     = prod_{n>=1} (1 - e^{(2 pi i/l)(rho_n - s)})
//
// plus the Weil-explicit-formula residual with the compactly supported test
// function F (F(x) = g(x) for x < 0, 0 otherwise) and the hat-xi functional
// equation residual (hat xi = theta^{-1} xi_{l,inf}; the log of
// hat xi(s) hat xi(1-l-s, conj chi) is affine in s).

#include "selzeta/dirichlet.hpp"
#include "selzeta/multigamma.hpp"
#include "selzeta/testfun.hpp"
#include "selzeta/util.hpp"

namespace selzeta {

struct HigherLContext {
  long l = 1;
  DirichletCharacter chi;
  ZeroList zeros;               // ordinates of L(s,chi) zeros (may be empty)
  long prime_cut = 1000000;     // prime-power bound for the explicit formula
  double zero_height_cut = 0.0; // 0 => use all loaded zeros

  HigherLContext(long l_, DirichletCharacter chi_, ZeroList zeros_ = {},
                 long prime_cut_ = 1000000, double height_cut = 0.0)
      : l(l_), chi(std::move(chi_)), zeros(std::move(zeros_)),
        prime_cut(prime_cut_), zero_height_cut(height_cut) {
    if (l < 1) throw DomainError("HigherLContext: l must be >= 1");
    if (prime_cut < 2) throw DomainError("HigherLContext: prime_cut must be >= 2");
    if (zero_height_cut > 0 && !zeros.ordinates.empty() &&
        Real::of(zero_height_cut, 64) > zeros.ordinates.back())
      throw DomainError("HigherLContext: zero_height_cut exceeds the loaded list");
  }
};

// ---------------------------------------------------------------------------
// L_{l,inf}.
// ---------------------------------------------------------------------------

// log L_{l,inf}(s, chi) = sum_{m=1}^{M} log L(s+lm, chi), truncated once
// |log L| < 2^-(wp+12) (|log L(sigma)| <= 2^{2-sigma} for sigma >= 2).
inline Cplx log_l_linf(const Cplx& s, const DirichletCharacter& chi, long l,
                       mpfr_prec_t wp) {
  if (l < 1) throw DomainError("l_linf: l must be >= 1");
  long M = static_cast<long>(
      std::ceil((static_cast<double>(wp) + 14.0 - s.re.to_double()) / l));
  M = std::max(M, 1l);
  bool principal = chi.is_principal();
  Cplx acc(wp);
  for (long m = 1; m <= M; ++m) {
    Cplx arg = s + l * m;
    if (principal && abs(arg - 1L) < Real::pow2(-(wp / 2), wp))
      throw PoleError("l_linf: ladder argument hits the pole of L at 1");
    acc += log(dirichlet_l(arg, chi, wp));
  }
  return acc;
}

inline Cplx l_linf(const Cplx& s, const DirichletCharacter& chi, long l,
                   mpfr_prec_t wp) {
  return exp(log_l_linf(s, chi, l, wp));
}

// |1 - L(s+l) L_{l,inf}(s+l) / L_{l,inf}(s)|.
inline Real l_linf_ladder_residual(const Cplx& s, const DirichletCharacter& chi, long l,
                                   mpfr_prec_t wp) {
  Cplx lhs = log_l_linf(s, chi, l, wp);
  Cplx rhs = log(dirichlet_l(s + l, chi, wp)) + log_l_linf(s + l, chi, l, wp);
  return abs(1L - exp(rhs - lhs));
}

// ---------------------------------------------------------------------------
// J_l.
// ---------------------------------------------------------------------------

inline Cplx log_j_l(const Cplx& s, long l, mpfr_prec_t wp) {
  if (l < 1) throw DomainError("j_l: l must be >= 1");
  Real ll = log(Real::of(l, wp));
  Cplx acc = -1L * (s / l) * log_k1(l, wp) - s * (s + l) * Real::ratio(1, 4 * l, wp) * ll;
  for (long r = 0; r < l; ++r) {
    acc += log_gamma2((s + 2 * r + l) / (2 * l), wp);
    acc += log_gamma2((s + 2 * r + 2 * l) / (2 * l), wp);
  }
  return acc;
}

inline Cplx j_l(const Cplx& s, long l, mpfr_prec_t wp) { return exp(log_j_l(s, l, wp)); }

// |1 - Gamma(s/2) J_l(s) / J_l(s-l)|  (the ladder J_l(s)/J_l(s-l) = Gamma(s/2)^{-1}).
inline Real j_l_ladder_residual(const Cplx& s, long l, mpfr_prec_t wp) {
  Cplx lhs = log_j_l(s, l, wp) - log_j_l(s - l, l, wp);
  Cplx rhs = -1L * log_gamma(s / 2L, wp);
  return abs(1L - exp(rhs - lhs));
}

// ---------------------------------------------------------------------------
// Complete higher Dirichlet L-function.
// ---------------------------------------------------------------------------

inline Cplx log_xi_linf_L(const Cplx& s, const DirichletCharacter& chi, long l,
                          mpfr_prec_t wp) {
  long q = chi.modulus();
  int v = chi.parity();
  bool delta = (q == 1);
  Real ll = log(Real::of(l, wp));
  Cplx acc(wp);
  if (delta)
    acc += -2L * (s / l) * ll - log_gamma((s + l) / l, wp) - log_gamma((s + l - 1) / l, wp);
  Real pi = Real::pi(wp);
  acc += s * (s + l) * Real::ratio(1, 4 * l, wp) * (log(pi) - log(Real::of(q, wp)));
  acc += log_j_l(s + Real::of(v, wp), l, wp);
  acc += log_l_linf(s, chi, l, wp);
  return acc;
}

inline Cplx xi_linf_L(const Cplx& s, const DirichletCharacter& chi, long l,
                      mpfr_prec_t wp) {
  return exp(log_xi_linf_L(s, chi, l, wp));
}

// |1 - xi(s+l) xi_{l,inf}(s+l) / xi_{l,inf}(s)|.
inline Real xi_linf_L_ladder_residual(const Cplx& s, const DirichletCharacter& chi,
                                      long l, mpfr_prec_t wp) {
  Cplx lhs = xi_linf_L(s, chi, l, wp);
  Cplx rhs = xi_complete(s + l, chi, wp) * xi_linf_L(s + l, chi, l, wp);
  return rel_dist(lhs, rhs);
}

// ---------------------------------------------------------------------------
// theta_{l,inf}(s, chi).
// ---------------------------------------------------------------------------

struct ThetaValue {
  Cplx value;
  double log2_tail;   // log2 bound on the first factor beyond the loaded
                      // list (factors dropped inside the list sit below
                      // 2^-prec, inside the precision contract)
  bool empty_list;    // no zeros loaded: value degenerates to 1
};

// Truncated product over the loaded zeros: factors with
// |e^{(2 pi i/l)(rho_n - s)}| < 2^-prec are dropped; the reported bound
// covers both the dropped factors and the first zero beyond the list, so
// callers can reject underpowered lists.
inline ThetaValue theta_linf_L(const Cplx& s, const ZeroList& zeros, long l,
                               const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  ThetaValue out{Cplx::of(1.0, 0.0, wp), 0.0, zeros.ordinates.empty()};
  if (out.empty_list) return out;  // bound 2^0: nothing is covered
  double im_s = s.im.to_double();
  double two_pi_over_l = 2.0 * 3.14159265358979324 / static_cast<double>(l);
  double drop_log2 = -static_cast<double>(ctx.prec_bits);
  Real two_pi = 2L * Real::pi(wp);
  for (const Real& t : zeros.ordinates) {
    double mag_log2 = -two_pi_over_l * (t.to_double() - im_s) * 1.4426950408889634;
    if (mag_log2 < drop_log2) continue;  // below the precision contract
    // exponent (2 pi i / l)(1/2 + i t - s)
    Cplx w = Cplx(Real::of(0.5, wp) - s.re, t - s.im);
    Cplx expo = Cplx(-w.im, w.re) * (two_pi / l);
    out.value *= (1L - exp(expo));
  }
  out.log2_tail = -two_pi_over_l * (zeros.ordinates.back().to_double() - im_s) *
                  1.4426950408889634;
  return out;
}

// log theta as a branch-stable sum of per-factor principal logs (for the
// functional-equation finite differences).
inline Cplx log_theta_linf_L(const Cplx& s, const ZeroList& zeros, long l,
                             const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  Cplx acc(wp);
  if (zeros.ordinates.empty()) return acc;
  double im_s = s.im.to_double();
  double two_pi_over_l = 2.0 * 3.14159265358979324 / static_cast<double>(l);
  double drop_log2 = -static_cast<double>(ctx.prec_bits);
  Real two_pi = 2L * Real::pi(wp);
  for (const Real& t : zeros.ordinates) {
    double mag_log2 = -two_pi_over_l * (t.to_double() - im_s) * 1.4426950408889634;
    if (mag_log2 < drop_log2) continue;
    Cplx w = Cplx(Real::of(0.5, wp) - s.re, t - s.im);
    Cplx expo = Cplx(-w.im, w.re) * (two_pi / l);
    acc += log(1L - exp(expo));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Weil explicit formula.
// ---------------------------------------------------------------------------

// The prime-power side, sum over p^n <= cut of
// (log p / p^{n/2}) chi(p)^n F(-n log p); F(log p^n) = 0 for the chosen F.
inline Cplx weil_prime_sum(const Cplx& s, const HigherLContext& h,
                           const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  long l = h.l;
  Cplx c = s + Real::ratio(l, 2, wp) - Real::of(0.5, wp);
  Cplx acc(wp);
  for (long p : primes_below(h.prime_cut)) {
    Real lp = log(Real::of(p, wp));
    auto t = h.chi.value_angle(p);
    if (!t) continue;
    long pn = p;
    for (long n = 1; pn <= h.prime_cut; ++n) {
      // F(-n log p) = [n log p / (2 sinh(n l log p / 2)) - 1/l] p^{-cn}
      Real nlp = lp * n;
      Real sh = 2L * sinh(nlp * Real::ratio(l, 2, wp));
      Cplx pw = exp(-1L * c * Cplx::of(nlp));
      Cplx fval = pw * (Cplx::of(nlp / sh) - Real::ratio(1, l, wp));
      Rat ang = *t * Rat(n);
      ang -= Rat(ang.floor_int());
      Cplx chival = root_of_unity(ang, wp);
      acc += chival * fval * (lp * exp(nlp * Real::of(-0.5, wp)));
      if (pn > h.prime_cut / p) break;
      pn *= p;
    }
  }
  return acc;
}

// The Lambda(n) Dirichlet-series form of the same quantity (the oracle for
// the prime side): -d^2/ds^2 log L_{l,inf}(s) - (1/l) d/ds log L(s+l/2),
// both series truncated at the same cut:
//   -(sum_{n<=cut} chi(n) Lambda(n) log n / (n^l - 1) n^{-s})
//   + (1/l) sum_{n<=cut} chi(n) Lambda(n) n^{-s-l/2}.
inline Cplx weil_prime_series_oracle(const Cplx& s, const HigherLContext& h,
                                     const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  long l = h.l;
  Cplx acc(wp);
  for (long p : primes_below(h.prime_cut)) {
    Real lp = log(Real::of(p, wp));
    auto t = h.chi.value_angle(p);
    if (!t) continue;
    long pn = p;
    for (long n = 1; pn <= h.prime_cut; ++n) {
      Real logn = lp * n;
      Real nl_minus1(wp);
      {
        Real pw = exp(logn * l);
        nl_minus1 = pw - 1L;
      }
      Cplx n_ms = exp(-1L * s * Cplx::of(logn));            // n^{-s}
      Real n_half_l = exp(logn * Real::ratio(-l, 2, wp));   // n^{-l/2}
      Rat ang = *t * Rat(n);
      ang -= Rat(ang.floor_int());
      Cplx chival = root_of_unity(ang, wp);
      acc += chival * n_ms * (lp * n_half_l / l - lp * (logn / nl_minus1));
      if (pn > h.prime_cut / p) break;
      pn *= p;
    }
  }
  return acc;
}

// |prime sum - Lambda-series oracle| (the two are termwise equal identities).
inline Real weil_prime_side_residual(const Cplx& s, const HigherLContext& h,
                                     const PrecisionContext& ctx) {
  Cplx lhs = -1L * weil_prime_sum(s, h, ctx);
  Cplx rhs = weil_prime_series_oracle(s, h, ctx);
  return abs(lhs - rhs);
}

// |zero side - archimedean side| of the explicit formula for the chosen F.
// The Gamma'/Gamma integral is taken in its J_l closed form
//   -d^2/ds^2 log J_l(s+v) - (1/(2l)) psi((s+v+l/2)/2),
// the second derivative by central differences of the analytic log sum.
inline Real weil_residual(const Cplx& s, const HigherLContext& h,
                          const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  long l = h.l;
  if (!(s.re.to_double() > 1.0 - static_cast<double>(l)))
    throw DomainError("weil_residual: requires Re s > 1 - l");
  int v = h.chi.parity();
  bool delta = (h.chi.modulus() == 1);

  // zero side
  Cplx zero_side(wp);
  Real cut = h.zero_height_cut > 0
                 ? Real::of(h.zero_height_cut, wp)
                 : (h.zeros.ordinates.empty() ? Real(wp) : h.zeros.ordinates.back());
  for (const Real& t : h.zeros.ordinates) {
    if (t > cut) break;
    zero_side += h_of_r(s, Cplx::of(t), l, wp);
  }

  // archimedean side
  Cplx arch(wp);
  if (delta) arch += h_of_r(s, Cplx::of(0.0, 0.5, wp), l, wp);  // M(f,-1/2)+M(f,1/2)
  Real hstep = Real::pow2(-static_cast<long>(wp / 3), wp);
  Cplx sv = s + Real::of(v, wp);
  Cplx d2j = fd_second(
      [&](const Cplx& z) { return log_j_l(z, l, wp); }, sv, hstep);
  arch -= d2j;
  arch -= digamma((sv + Real::ratio(l, 2, wp)) / 2L, wp) / (2L * Real::of(l, wp));
  arch -= weil_prime_sum(s, h, ctx);

  return abs(zero_side - arch);
}

// ---------------------------------------------------------------------------
// hat-xi functional equation.
// ---------------------------------------------------------------------------

// log[ hat xi_{l,inf}(s, chi) hat xi_{l,inf}(1-l-s, conj chi) ] with
// hat xi = theta^{-1} xi_{l,inf}; zeros_conj is the list for conj chi.
inline Cplx log_hat_xi_pair(const Cplx& s, const HigherLContext& h,
                            const ZeroList& zeros_conj, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  DirichletCharacter cc = h.chi.conjugate();
  Cplx refl = 1L - h.l - s;
  Cplx a = log_xi_linf_L(s, h.chi, h.l, wp) - log_theta_linf_L(s, h.zeros, h.l, ctx);
  Cplx b = log_xi_linf_L(refl, cc, h.l, wp) - log_theta_linf_L(refl, zeros_conj, h.l, ctx);
  return a + b;
}

// Magnitude of the second central difference (step 1e-3, real and imaginary
// directions) of the affine-in-s log above.
inline Real functional_eq_L_residual(const Cplx& s, const HigherLContext& h,
                                     const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  const ZeroList& zc = h.zeros;  // conj chi has the same ordinates for real chi
  auto G = [&](const Cplx& z) { return log_hat_xi_pair(z, h, zc, ctx); };
  Real hstep = Real::of(1e-3, wp);
  Cplx d2_re = fd_second(G, s, hstep);
  Cplx hp(Real(wp), hstep);
  Cplx d2_im = (G(s + hp) - 2L * G(s) + G(s - hp)) / (hp * hp);
  return max(abs(d2_re), abs(d2_im));
}

// Least-squares affine fit of G over sample points on a real segment;
// returns (a, b, max deviation). a and b are numeric estimates only.
struct AffineFit {
  Cplx a, b;
  Real max_dev;
};

inline AffineFit affine_fit_hat_xi(const Cplx& s0, double step, int count,
                                   const HigherLContext& h, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  std::vector<Cplx> xs, ys;
  for (int j = 0; j < count; ++j) {
    Cplx sj = s0 + Real::of(step * j, wp);
    xs.push_back(sj);
    ys.push_back(log_hat_xi_pair(sj, h, h.zeros, ctx));
  }
  // normal equations for y = a x + b
  Cplx sx(wp), sy(wp), sxx(wp), sxy(wp);
  for (int j = 0; j < count; ++j) {
    sx += xs[j];
    sy += ys[j];
    sxx += xs[j] * xs[j];
    sxy += xs[j] * ys[j];
  }
  Cplx n = Cplx::of(static_cast<double>(count), 0.0, wp);
  Cplx det = n * sxx - sx * sx;
  AffineFit fit{(n * sxy - sx * sy) / det, (sxx * sy - sx * sxy) / det, Real(wp)};
  for (int j = 0; j < count; ++j) {
    Real dev = abs(ys[j] - (fit.a * xs[j] + fit.b));
    fit.max_dev = max(fit.max_dev, dev);
  }
  return fit;
}

}  // namespace selzeta
