#pragma once

// The higher central / elliptic / parabolic factors and their assembly:
//
//   F_l(s) = exp{ -(s/l) log(k2(l)^{-2} k1(l)) + s(s+l)/2 log 2pi
//                 + s(s+l)(3-2s-l)/(6l) log l }
//            prod_{r<l} Gamma3((s+l+r)/l)^{-2l} Gamma2((s+l+r)/l)^{2l-2r-1}
//   G_l(s) = l odd : exp(s log(l) / 2l)   prod_{r<l} Gamma((s+l+r)/(2l))^{(-1)^r}
//            l even: exp(s log(l/2) / 2l) prod_{r<l} Gamma2((s+l+r)/l)^{(-1)^r}
//   H_l(s) = three explicit product builders selected by l mod 3
//   I_l(s) = exp{ -(s/l) log k1(l) - s(s+l)/(2l) log l }
//            prod_{r<l} Gamma2((s+l+r)/l)
//
// with quotient ladders X_l(s)/X_l(s-l) = (2pi)^s Gamma2(s)^2/Gamma(s),
// Gamma(s/2)^{-1}Gamma((s+1)/2), Gamma(s/3)^{-1}Gamma((s+2)/3), Gamma(s)^{-1}
// respectively, the assembled Xi_{l-inf,I/ell/par}, the periodic spectral
// product Theta_{l-inf}, and the exact higher divisor catalog.

#include "selzeta/higher_l.hpp"
#include "selzeta/selberg.hpp"

namespace selzeta {

enum class HigherFactorKind { F, G, H, I };

inline Cplx log_higher_factor(HigherFactorKind kind, const Cplx& s, long l,
                              mpfr_prec_t wp) {
  if (l < 1) throw DomainError("higher_factor: l must be >= 1");
  Real ll = log(Real::of(l, wp));
  const Constants& cst = constants_wp(wp);
  switch (kind) {
    case HigherFactorKind::F: {
      Cplx acc = -1L * (s / l) * (-2L * log_k2(l, wp) + log_k1(l, wp));
      acc += s * (s + l) * Real::of(0.5, wp) * cst.log_2pi;
      acc += s * (s + l) * (3L - 2L * s - l) * Real::ratio(1, 6 * l, wp) * ll;
      for (long r = 0; r < l; ++r) {
        Cplx a = (s + l + r) / l;
        acc += -2L * l * log_gamma3(a, wp) +
               static_cast<long>(2 * l - 2 * r - 1) * log_gamma2(a, wp);
      }
      return acc;
    }
    case HigherFactorKind::G: {
      Cplx acc(wp);
      if (l % 2 == 1) {
        acc = s * (ll / (2 * l));
        for (long r = 0; r < l; ++r) {
          Cplx term = log_gamma((s + l + r) / (2 * l), wp);
          acc += (r % 2 == 0) ? term : -1L * term;
        }
      } else {
        acc = s * (log(Real::ratio(l, 2, wp)) / (2 * l));
        for (long r = 0; r < l; ++r) {
          Cplx term = log_gamma2((s + l + r) / l, wp);
          acc += (r % 2 == 0) ? term : -1L * term;
        }
      }
      return acc;
    }
    case HigherFactorKind::H: {
      Cplx acc(wp);
      long res = l % 3;
      if (res == 1) {
        acc = 2L * s * (ll / (3 * l));
        for (long r = 0; 3 * r <= l - 1; ++r)
          acc += log_gamma((s + l + 3 * r) / (3 * l), wp) +
                 log_gamma((s + 2 * l + 3 * r) / (3 * l), wp);
        for (long r = 0; 3 * r <= l - 4; ++r)
          acc -= log_gamma((s + l + 3 * r + 2) / (3 * l), wp) +
                 log_gamma((s + 2 * l + 3 * r + 1) / (3 * l), wp);
      } else if (res == 2) {
        acc = 2L * s * (ll / (3 * l));
        for (long r = 0; 3 * r <= l - 2; ++r)
          acc += log_gamma((s + l + 3 * r) / (3 * l), wp) +
                 log_gamma((s + 2 * l + 3 * r + 1) / (3 * l), wp);
        for (long r = 0; 3 * r <= l - 5; ++r)
          acc -= log_gamma((s + l + 3 * r + 2) / (3 * l), wp) +
                 log_gamma((s + 2 * l + 3 * r + 2) / (3 * l), wp);
      } else {  // l = 0 mod 3 (the residue-3 branch)
        acc = 2L * s * (log(Real::ratio(l, 3, wp)) / (3 * l));
        for (long r = 0; 3 * r <= l - 3; ++r)
          acc += log_gamma2((s + l + 3 * r) / l, wp) -
                 log_gamma2((s + l + 3 * r + 2) / l, wp);
      }
      return acc;
    }
    case HigherFactorKind::I: {
      Cplx acc = -1L * (s / l) * log_k1(l, wp) -
                 s * (s + l) * Real::ratio(1, 2 * l, wp) * ll;
      for (long r = 0; r < l; ++r) acc += log_gamma2((s + l + r) / l, wp);
      return acc;
    }
  }
  throw DomainError("higher_factor: unknown kind");
}

inline Cplx higher_factor(HigherFactorKind kind, const Cplx& s, long l,
                          const PrecisionContext& ctx) {
  return exp(log_higher_factor(kind, s, l, ctx.wprec()));
}

// |1 - R(s)^{-1} X_l(s)/X_l(s-l)| with R the kind's ladder quotient.
inline Real higher_factor_ladder_residual(HigherFactorKind kind, const Cplx& s, long l,
                                          mpfr_prec_t wp) {
  Cplx lhs = log_higher_factor(kind, s, l, wp) - log_higher_factor(kind, s - l, l, wp);
  Cplx rhs(wp);
  const Constants& cst = constants_wp(wp);
  switch (kind) {
    case HigherFactorKind::F:
      rhs = s * cst.log_2pi + 2L * log_gamma2(s, wp) - log_gamma(s, wp);
      break;
    case HigherFactorKind::G:
      rhs = log_gamma((s + 1L) / 2L, wp) - log_gamma(s / 2L, wp);
      break;
    case HigherFactorKind::H:
      rhs = log_gamma((s + 2L) / 3L, wp) - log_gamma(s / 3L, wp);
      break;
    case HigherFactorKind::I:
      rhs = -1L * log_gamma(s, wp);
      break;
  }
  return abs(1L - exp(rhs - lhs));
}

// ---------------------------------------------------------------------------
// Assembled Xi_{l-inf} factors.
// ---------------------------------------------------------------------------

enum class XiPart { I, Ell, Par };

inline Cplx log_xi_linf_factor(XiPart part, const Cplx& s, long l, const GroupData& data,
                               const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  switch (part) {
    case XiPart::I:
      return Real::ratio(data.psl_index, 6, wp) *
             log_higher_factor(HigherFactorKind::F, s, l, wp);
    case XiPart::Ell: {
      Cplx acc(wp);
      if (data.nu2)
        acc += Real::ratio(data.nu2, 2, wp) *
               log_higher_factor(HigherFactorKind::G, s, l, wp);
      if (data.nu3)
        acc += Real::ratio(2 * data.nu3, 3, wp) *
               log_higher_factor(HigherFactorKind::H, s, l, wp);
      return acc;
    }
    case XiPart::Par: {
      long k0 = data.kappa0_or_throw();
      Real log_d = log(data.a_const) +
                   data.kappa * (log(Real::of(2, wp)) - log(Real::pi(wp)));
      Real ll = log(Real::of(l, wp));
      Cplx acc = -1L * s * (s + l) * Real::ratio(1, 2 * l, wp) * log_d;
      if (data.kappa != k0) {
        Cplx blk = s * (ll / l) + log_gamma((s + l - Real::of(0.5, wp)) / l, wp);
        acc += Real::ratio(data.kappa - k0, 2, wp) * blk;
      }
      Cplx li_half = log_higher_factor(HigherFactorKind::I, s + Real::of(0.5, wp), l, wp);
      Cplx li = log_higher_factor(HigherFactorKind::I, s, l, wp);
      acc += static_cast<long>(data.kappa) * (li_half + li);
      for (const auto& p : data.pairs)
        acc += log_l_linf(2L * s, p.combined, 2 * l, wp);
      return acc;
    }
  }
  throw DomainError("xi_linf_factor: unknown part");
}

inline Cplx xi_linf_factor(XiPart part, const Cplx& s, long l, const GroupData& data,
                           const PrecisionContext& ctx) {
  return exp(log_xi_linf_factor(part, s, l, data, ctx));
}

// Assembly ladder residual |1 - Xi_{l-inf,part}(s) Xi_part(s+l) / Xi_{l-inf,part}(s+l)|
// (valid for Re s > 1 - l).
inline Real xi_linf_ladder_residual(XiPart part, const Cplx& s, long l,
                                    const GroupData& data, const PrecisionContext& ctx) {
  Cplx v1 = xi_linf_factor(part, s, l, data, ctx);
  Cplx v3 = xi_linf_factor(part, s + l, l, data, ctx);
  Cplx v2(ctx.wprec());
  switch (part) {
    case XiPart::I: v2 = xi_I(s + l, data, ctx); break;
    case XiPart::Ell: v2 = xi_ell(s + l, data, ctx); break;
    case XiPart::Par: v2 = xi_par(s + l, data, ctx); break;
  }
  return abs(1L - v1 * v2 / v3);
}

// ---------------------------------------------------------------------------
// Spectral lists and Theta_{l-inf}.
// ---------------------------------------------------------------------------

struct SpectralList {
  bool include_r0 = false;     // the lambda_0 = 0 entry r_0 = i/2
  std::vector<Real> r_values;  // real spectral parameters, ascending
  std::string source;
};

// Same line format as zero lists; the token `i/2` denotes r_0.
inline SpectralList load_spectral_list(const std::string& path, mpfr_prec_t wp) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spectral list: " + path, 0);
  SpectralList sl;
  sl.source = path;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    std::string tok = line.substr(b, e - b + 1);
    if (tok == "i/2") {
      sl.include_r0 = true;
      continue;
    }
    Real t(wp);
    try {
      t = Real::from_string(tok.c_str(), wp);
    } catch (const DomainError&) {
      throw ParseError("unparsable spectral parameter '" + tok + "'", line_no);
    }
    if (!(t > 0.0)) throw MonotonicityError("spectral parameters must be positive", line_no);
    if (!sl.r_values.empty() && !(sl.r_values.back() < t))
      throw MonotonicityError("spectral parameters must be strictly increasing", line_no);
    sl.r_values.push_back(t);
  }
  return sl;
}

inline SpectralList synthetic_spectrum(std::initializer_list<double> rs, mpfr_prec_t wp,
                                       bool include_r0 = false) {
  SpectralList sl;
  sl.include_r0 = include_r0;
  sl.source = "synthetic";
  for (double r : rs) sl.r_values.push_back(Real::of(r, wp));
  return sl;
}

// Theta_{l-inf}(s) = prod_n (1 - e^{(2 pi i / l)(1/2 + i r_n - s)}), the
// r_0 = i/2 entry contributing the exact real-shift factor 1 - e^{-2 pi i s/l}.
// Factors below 2^-prec are dropped; the reported bound covers the dropped
// factors and the first spectral parameter beyond the list.
inline ThetaValue theta_linf(const Cplx& s, long l, const SpectralList& spec,
                             const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  ThetaValue out{Cplx::of(1.0, 0.0, wp), 0.0,
                 spec.r_values.empty() && !spec.include_r0};
  if (out.empty_list) return out;
  Real two_pi = 2L * Real::pi(wp);
  if (spec.include_r0) {
    Cplx expo = Cplx(s.im, -s.re) * (two_pi / l);  // -2 pi i s / l
    out.value *= (1L - exp(expo));
  }
  double im_s = s.im.to_double();
  double two_pi_over_l = 2.0 * 3.14159265358979324 / static_cast<double>(l);
  double drop_log2 = -static_cast<double>(ctx.prec_bits);
  for (const Real& r : spec.r_values) {
    double mag_log2 = -two_pi_over_l * (r.to_double() - im_s) * 1.4426950408889634;
    if (mag_log2 < drop_log2) continue;  // below the precision contract
    Cplx w = Cplx(Real::of(0.5, wp) - s.re, r - s.im);  // 1/2 + i r - s
    Cplx expo = Cplx(-w.im, w.re) * (two_pi / l);
    out.value *= (1L - exp(expo));
  }
  if (!spec.r_values.empty())
    out.log2_tail = -two_pi_over_l * (spec.r_values.back().to_double() - im_s) *
                    1.4426950408889634;
  else
    out.log2_tail = -std::numeric_limits<double>::infinity();
  return out;
}

// |analytic d^2/ds^2 log Theta - central finite difference|, step 2^-(prec/3).
inline Real theta_second_logderiv_residual(const Cplx& s, long l,
                                           const SpectralList& spec,
                                           const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  auto log_theta = [&](const Cplx& z) {
    Cplx acc(wp);
    Real two_pi = 2L * Real::pi(wp);
    if (spec.include_r0) acc += log(1L - exp(Cplx(z.im, -z.re) * (two_pi / l)));
    for (const Real& r : spec.r_values) {
      Cplx w = Cplx(Real::of(0.5, wp) - z.re, r - z.im);
      acc += log(1L - exp(Cplx(-w.im, w.re) * (two_pi / l)));
    }
    return acc;
  };
  Real h = Real::pow2(-(ctx.prec_bits / 3), wp);
  Cplx fd = fd_second(log_theta, s, h);
  // analytic side: -(pi/l)^2 sum_n csc^2(pi(s - 1/2 - i r_n)/l)
  Real pi = Real::pi(wp);
  Real pl2 = (pi / l) * (pi / l);
  Cplx rhs(wp);
  auto add_term = [&](const Cplx& srif) {
    Cplx sn = sin(srif * (pi / l));
    if (abs(sn).is_zero()) throw PoleError("theta log-derivative at a zero of Theta");
    rhs -= Cplx::of(pl2) / (sn * sn);
  };
  if (spec.include_r0) add_term(s);  // r_0 = i/2: s - 1/2 - i(i/2) = s
  for (const Real& r : spec.r_values) add_term(Cplx(s.re - 0.5, s.im - r));
  return abs(fd - rhs);
}

// ---------------------------------------------------------------------------
// Higher divisor catalog.
// ---------------------------------------------------------------------------

namespace detail {

inline long ord_higher_F(const Rat& s0, long l) {
  long acc = 0;
  for (long r = 0; r < l; ++r) {
    Rat a = (s0 + Rat(l + r)) / Rat(l);
    acc += -2 * l * ord_gamma3_rat(a) + (2 * l - 2 * r - 1) * ord_gamma2_rat(a);
  }
  return acc;
}

inline long ord_higher_G(const Rat& s0, long l) {
  long acc = 0;
  for (long r = 0; r < l; ++r) {
    long sgn = (r % 2 == 0) ? 1 : -1;
    if (l % 2 == 1)
      acc += sgn * ord_gamma_rat((s0 + Rat(l + r)) / Rat(2 * l));
    else
      acc += sgn * ord_gamma2_rat((s0 + Rat(l + r)) / Rat(l));
  }
  return acc;
}

inline long ord_higher_H(const Rat& s0, long l) {
  long acc = 0;
  long res = l % 3;
  if (res == 1) {
    for (long r = 0; 3 * r <= l - 1; ++r)
      acc += ord_gamma_rat((s0 + Rat(l + 3 * r)) / Rat(3 * l)) +
             ord_gamma_rat((s0 + Rat(2 * l + 3 * r)) / Rat(3 * l));
    for (long r = 0; 3 * r <= l - 4; ++r)
      acc -= ord_gamma_rat((s0 + Rat(l + 3 * r + 2)) / Rat(3 * l)) +
             ord_gamma_rat((s0 + Rat(2 * l + 3 * r + 1)) / Rat(3 * l));
  } else if (res == 2) {
    for (long r = 0; 3 * r <= l - 2; ++r)
      acc += ord_gamma_rat((s0 + Rat(l + 3 * r)) / Rat(3 * l)) +
             ord_gamma_rat((s0 + Rat(2 * l + 3 * r + 1)) / Rat(3 * l));
    for (long r = 0; 3 * r <= l - 5; ++r)
      acc -= ord_gamma_rat((s0 + Rat(l + 3 * r + 2)) / Rat(3 * l)) +
             ord_gamma_rat((s0 + Rat(2 * l + 3 * r + 2)) / Rat(3 * l));
  } else {
    for (long r = 0; 3 * r <= l - 3; ++r)
      acc += ord_gamma2_rat((s0 + Rat(l + 3 * r)) / Rat(l)) -
             ord_gamma2_rat((s0 + Rat(l + 3 * r + 2)) / Rat(l));
  }
  return acc;
}

inline long ord_higher_I(const Rat& s0, long l) {
  long acc = 0;
  for (long r = 0; r < l; ++r) acc += ord_gamma2_rat((s0 + Rat(l + r)) / Rat(l));
  return acc;
}

inline long ord_l_2linf(const Rat& y, const DirichletCharacter& chi, long l) {
  long acc = 0;
  for (long m = 1;; ++m) {
    Rat arg = y + Rat(2 * l * m);
    if (arg > Rat(1)) break;
    acc += ord_L_rat(arg, chi);
  }
  return acc;
}

}  // namespace detail

// Rational-point orders of the higher gamma factors at s0 (exact rationals).
inline GammaFactorOrders higher_factor_orders(const GroupData& data, long l,
                                              const Rat& s0) {
  GammaFactorOrders w;
  w.w_I = Rat(data.psl_index, 6) * Rat(detail::ord_higher_F(s0, l));
  w.w_ell = Rat(data.nu2, 2) * Rat(detail::ord_higher_G(s0, l)) +
            Rat(2 * data.nu3, 3) * Rat(detail::ord_higher_H(s0, l));
  long k0 = data.kappa0_or_throw();
  Rat wpar = Rat(data.kappa - k0, 2) *
             Rat(detail::ord_gamma_rat((s0 + Rat(l) - Rat(1, 2)) / Rat(l)));
  wpar += Rat(data.kappa) * Rat(detail::ord_higher_I(s0 + Rat(1, 2), l) +
                                detail::ord_higher_I(s0, l));
  for (const auto& p : data.pairs)
    wpar += Rat(detail::ord_l_2linf(Rat(2) * s0, p.combined, l));
  w.w_par = wpar;
  return w;
}

// Poles of Xi_{l-inf} on the real line from the lambda_0 = 0 spectral family
// (s = -lm and s = 1-lm, m >= 1).
inline long ord_xi_linf_real(const Rat& s0, long l) {
  long acc = 0;
  if (s0.is_integer() && s0.num <= -l && (-s0.num) % l == 0) acc -= 1;
  Rat sm1 = s0 - Rat(1);
  if (sm1.is_integer() && sm1.num <= -l && (-sm1.num) % l == 0) acc -= 1;
  return acc;
}

// Exact divisor catalog of Xi_{l-inf,hyp} on [s_min, s_max].
inline std::vector<DivisorEntry> catalog_higher(const GroupData& data, long l,
                                                const Rat& s_min, const Rat& s_max) {
  if (l < 1) throw DomainError("catalog_higher: l must be >= 1");
  std::vector<DivisorEntry> out;
  long lo = (s_min * Rat(2)).floor_int();
  long hi = (s_max * Rat(2)).floor_int();
  for (long two_s = lo; two_s <= hi; ++two_s) {
    Rat s0(two_s, 2);
    if (s0 < s_min || s_max < s0) continue;
    GammaFactorOrders w = higher_factor_orders(data, l, s0);
    Rat ord_xi = Rat(ord_xi_linf_real(s0, l));
    Rat net = ord_xi - w.total();
    if (!net.is_integer())
      throw DomainError("catalog_higher: non-integer net order at s = " + s0.str());
    if (net.num == 0) continue;
    DivisorEntry e;
    e.kind = DivisorEntry::Kind::Rational;
    e.location = s0;
    e.order = net.num;
    e.breakdown = "Xi_linf:" + ord_xi.str() + " I:" + w.w_I.str() +
                  " ell:" + w.w_ell.str() + " par:" + w.w_par.str();
    out.push_back(e);
  }
  // shifted families start at m = 1, so their real loci sit below 1/2 - l + 1/2
  if (s_min <= Rat(1, 2) - Rat(l) + Rat(1, 2)) {
    for (size_t i = 0; i < data.pairs.size(); ++i) {
      DivisorEntry e;
      e.kind = DivisorEntry::Kind::LHalfFamily;
      e.order = -1;
      e.shift = l;
      e.char_index = static_cast<long>(i);
      e.breakdown = "poles at s = rho/2 - " +
                    std::string(l == 1 ? "" : std::to_string(l)) +
                    "m from zeros of L(2s, chi_" + std::to_string(i) + ")";
      out.push_back(e);
    }
    DivisorEntry e;
    e.kind = DivisorEntry::Kind::SpectralFamily;
    e.order = -1;
    e.shift = l;
    e.breakdown = "poles at s = 1/2 - " +
                  std::string(l == 1 ? "" : std::to_string(l)) +
                  "m +- i r_n (m >= 1, n >= 1)";
    out.push_back(e);
  }
  return out;
}

}  // namespace selzeta
