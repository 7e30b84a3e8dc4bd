#pragma once

// Gamma factors of the complete Selberg zeta function,
//
//   Xi_I(s)   = exp{(vol/2pi)(s log 2pi + log(Gamma2(s)^2 / Gamma(s)))}
//   Xi_ell(s) = {Gamma(s/2)^{-1} Gamma((s+1)/2)}^{nu2/2}
//               {Gamma(s/3)^{-1} Gamma((s+2)/3)}^{2 nu3/3}
//   Xi_par(s) = (A 2^k / pi^k)^{-s} (s-1/2)^{(k-k0)/2}
//               Gamma(s+1/2)^{-k} Gamma(s)^{-k} prod_chi L(2s, chi)^{-1}
//
// and the exact real-point divisor catalog of Xi_hyp = Xi / (Xi_I Xi_ell
// Xi_par). Fractional powers use exp(exponent * principal log) of the
// already-evaluated base; verification points stay off the negative real
// axis of each base.

#include <string>
#include <vector>

#include "selzeta/congruence.hpp"
#include "selzeta/multigamma.hpp"

namespace selzeta {

inline Cplx log_xi_I(const Cplx& s, const GroupData& data, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  const Constants& c = constants_wp(wp);
  Cplx inner = s * c.log_2pi + 2L * log_gamma2(s, wp) - log_gamma(s, wp);
  return Real::ratio(data.psl_index, 6, wp) * inner;  // vol/2pi = index/6
}

inline Cplx xi_I(const Cplx& s, const GroupData& data, const PrecisionContext& ctx) {
  return exp(log_xi_I(s, data, ctx));
}

// branch_note, when given, is set if a fractional-power base lands on or near
// the negative real axis (principal-branch choice is then load-bearing).
inline Cplx xi_ell(const Cplx& s, const GroupData& data, const PrecisionContext& ctx,
                   bool* branch_note = nullptr) {
  mpfr_prec_t wp = ctx.wprec();
  if (branch_note) *branch_note = false;
  Cplx out = Cplx::of(1.0, 0.0, wp);
  auto note = [&](const Cplx& base) {
    if (branch_note && base.re.sign() < 0 &&
        abs(base.im) < abs(base.re) * Real::of(1e-6, wp))
      *branch_note = true;
  };
  if (data.nu2 != 0) {
    Cplx base = exp(log_gamma((s + 1L) / 2L, wp) - log_gamma(s / 2L, wp));
    note(base);
    out *= exp(Real::ratio(data.nu2, 2, wp) * log(base));
  }
  if (data.nu3 != 0) {
    Cplx base = exp(log_gamma((s + 2L) / 3L, wp) - log_gamma(s / 3L, wp));
    note(base);
    out *= exp(Real::ratio(2 * data.nu3, 3, wp) * log(base));
  }
  return out;
}

inline Cplx xi_par(const Cplx& s, const GroupData& data, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  long k0 = data.kappa0_or_throw();
  long half_diff = (data.kappa - k0) / 2;
  Real log_base = log(data.a_const) + data.kappa * (log(Real::of(2, wp)) - log(Real::pi(wp)));
  Cplx acc = exp(-1L * s * log_base -
                 static_cast<long>(data.kappa) * (log_gamma(s + Real::of(0.5, wp), wp) +
                                                  log_gamma(s, wp)));
  if (half_diff != 0) acc *= pow(s - Real::of(0.5, wp), half_diff);
  for (const auto& p : data.pairs) acc = acc / dirichlet_l(2L * s, p.combined, wp);
  if (!acc.is_finite()) throw PoleError("xi_par: pole of the displayed product");
  return acc;
}

// ---------------------------------------------------------------------------
// Divisor catalog.
// ---------------------------------------------------------------------------

struct DivisorEntry {
  enum class Kind { Rational, LHalfFamily, SpectralFamily };
  Kind kind = Kind::Rational;
  Rat location;      // rational points only
  long order = 0;    // signed: > 0 zero, < 0 pole; families carry the
                     // per-member order
  long shift = 0;    // family shift parameter m
  long char_index = -1;  // LHalfFamily: index into data.pairs
  std::string breakdown;

  // shift = 0: the base families (rho/2, 1/2 +- i r_n); shift = l > 0: the
  // shifted families rho/2 - l*m, 1/2 - l*m +- i r_n over m >= 1.
  std::string location_str() const {
    std::string step = shift == 1 ? "m" : std::to_string(shift) + "m";
    switch (kind) {
      case Kind::Rational: return location.str();
      case Kind::LHalfFamily: return shift == 0 ? "rho/2" : ("rho/2-" + step);
      case Kind::SpectralFamily:
        return shift == 0 ? "1/2+-i*r_n" : ("1/2-" + step + "+-i*r_n");
    }
    return "?";
  }
};

namespace detail {

inline long ord_gamma_rat(const Rat& x) {
  return (x.is_integer() && x.num <= 0) ? -1 : 0;
}
inline long ord_gamma2_rat(const Rat& x) {
  return (x.is_integer() && x.num <= 0) ? -(-x.num + 1) : 0;
}
inline long ord_gamma3_rat(const Rat& x) {
  if (!(x.is_integer() && x.num <= 0)) return 0;
  long n = -x.num;
  return -((n + 1) * (n + 2) / 2);
}

// Order of L(y, chi) at exact rational y (trivial zeros, the s=1 pole for
// principal characters, and the y=0 zeros of dropped Euler factors).
inline long ord_L_rat(const Rat& y, const DirichletCharacter& chi) {
  long ord = 0;
  DirichletCharacter prim = primitive_part(chi);
  long f = prim.modulus();
  bool principal = prim.is_principal();  // f == 1
  if (principal) {
    if (y == Rat(1)) ord -= 1;
    if (y.is_integer() && y.num < 0 && (-y.num) % 2 == 0) ord += 1;
  } else {
    long v = prim.parity();
    if (y.is_integer() && y.num <= 0 && ((-y.num) % 2) == (v % 2)) ord += 1;
  }
  if (y == Rat(0)) {
    // Euler factors 1 - chi*(p) p^{-y} removed at primes p | q, p !| f
    for (long p : prime_divisors(chi.modulus())) {
      if (f % p == 0) continue;
      auto t = prim.value_angle(p);
      if (t && t->num == 0) ord += 1;
    }
  }
  return ord;
}

}  // namespace detail

// Rational-point orders of the three gamma factors at s0, as exact
// rationals (the individual factors carry fractional orders; only the
// combination is integral).
struct GammaFactorOrders {
  Rat w_I, w_ell, w_par;
  Rat total() const { return w_I + w_ell + w_par; }
};

inline GammaFactorOrders selberg_factor_orders(const GroupData& data, const Rat& s0) {
  GammaFactorOrders w;
  w.w_I = Rat(data.psl_index, 6) *
          Rat(2 * detail::ord_gamma2_rat(s0) - detail::ord_gamma_rat(s0));
  Rat two(2), three(3);
  w.w_ell = Rat(data.nu2, 2) * Rat(detail::ord_gamma_rat((s0 + Rat(1)) / two) -
                                   detail::ord_gamma_rat(s0 / two)) +
            Rat(2 * data.nu3, 3) * Rat(detail::ord_gamma_rat((s0 + Rat(2)) / three) -
                                       detail::ord_gamma_rat(s0 / three));
  long k0 = data.kappa0_or_throw();
  Rat wp(0);
  if (s0 == Rat(1, 2)) wp += Rat((data.kappa - k0) / 2);
  wp -= Rat(data.kappa) * Rat(detail::ord_gamma_rat(s0 + Rat(1, 2)));
  wp -= Rat(data.kappa) * Rat(detail::ord_gamma_rat(s0));
  for (const auto& p : data.pairs) wp -= Rat(detail::ord_L_rat(Rat(2) * s0, p.combined));
  w.w_par = wp;
  return w;
}

// Exact divisor catalog of Xi_hyp on [s_min, s_max]: rational entries first
// (ascending), then the symbolic zero families (nontrivial L-zeros at rho/2
// per character; spectral points 1/2 +- i r_n, n >= 1). The lambda_0 = 0
// eigenvalue contributes ord Xi = 1 at s in {0, 1}; small eigenvalues
// 0 < lambda < 1/4 would add real zeros but none exist for the verified
// groups (data-dependent assumption, reported in the breakdown).
inline std::vector<DivisorEntry> catalog_selberg(const GroupData& data, const Rat& s_min,
                                                 const Rat& s_max) {
  std::vector<DivisorEntry> out;
  // all rational contributions live on the half-integer grid
  long lo = (s_min * Rat(2)).floor_int();
  long hi = (s_max * Rat(2)).floor_int();
  for (long two_s = lo; two_s <= hi; ++two_s) {
    Rat s0(two_s, 2);
    if (s0 < s_min || s_max < s0) continue;
    GammaFactorOrders w = selberg_factor_orders(data, s0);
    Rat ord_xi = (s0 == Rat(0) || s0 == Rat(1)) ? Rat(1) : Rat(0);
    Rat net = ord_xi - w.total();
    if (!net.is_integer())
      throw DomainError("catalog_selberg: non-integer net order at s = " + s0.str());
    if (net.num == 0) continue;
    DivisorEntry e;
    e.kind = DivisorEntry::Kind::Rational;
    e.location = s0;
    e.order = net.num;
    e.breakdown = "Xi:" + ord_xi.str() + " I:" + w.w_I.str() + " ell:" + w.w_ell.str() +
                  " par:" + w.w_par.str();
    out.push_back(e);
  }
  // symbolic families (zeros of Xi_hyp); their real loci sit in (0, 1/2],
  // so they are emitted only when the window reaches that strip
  if (s_min <= Rat(1, 2) && Rat(0) <= s_max) {
    for (size_t i = 0; i < data.pairs.size(); ++i) {
      DivisorEntry e;
      e.kind = DivisorEntry::Kind::LHalfFamily;
      e.order = 1;
      e.shift = 0;
      e.char_index = static_cast<long>(i);
      e.breakdown = "zeros of L(2s, chi_" + std::to_string(i) + ") at s = rho/2";
      out.push_back(e);
    }
    DivisorEntry e;
    e.kind = DivisorEntry::Kind::SpectralFamily;
    e.order = 1;
    e.shift = 0;
    e.breakdown = "spectral zeros s = 1/2 +- i r_n (n >= 1); lambda0 handled at s=0,1";
    out.push_back(e);
  }
  return out;
}

}  // namespace selzeta
