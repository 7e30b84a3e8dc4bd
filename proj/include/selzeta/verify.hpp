#pragma once

// Verification suites. Every analytic identity the library implements is
// re-checked here at runtime against its independent route (brute series,
// quadrature, closed-form lists, alternating-series acceleration), with
// seeded sample points so reports are byte-identical across runs.

#include <cstdlib>
#include <map>

#include "selzeta/higher.hpp"
#include "selzeta/quad.hpp"
#include "selzeta/report.hpp"
#include "selzeta/util.hpp"
#include "selzeta/zeros.hpp"

namespace selzeta {

struct VerifyOptions {
  PrecisionContext ctx;
  std::uint64_t seed = SeededSampler::kDefaultSeed;
  std::string data_dir;      // location of zeta_zeros_100.txt etc.
  long weil_prime_cut = 1000000;

  VerifyOptions() {
#ifdef SELZETA_SOURCE_DATA_DIR
    data_dir = SELZETA_SOURCE_DATA_DIR;
#endif
    if (const char* env = std::getenv("SELZETA_DATA")) data_dir = env;
  }
};

namespace detail {

// Catalan's constant by Cohen-Villegas-Zagier acceleration of the
// alternating odd-reciprocal-squares series (independent of dirichlet_l).
inline Real catalan_cvz(mpfr_prec_t wp) {
  int n = 96;
  Real d = pow(Real::of(3, wp) + sqrt(Real::of(8, wp)), static_cast<long>(n));
  d = (d + 1L / d) / 2L;
  Real b = Real::of(-1L, wp);
  Real c = -d;
  Real s(wp);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * Real::ratio(1, (2 * k + 1) * (2 * k + 1), wp);
    b = b * (k + Real::of(n, wp)) * (k - Real::of(n, wp)) /
        ((k + Real::of(0.5, wp)) * (k + 1L));
  }
  return s / d;
}

inline bool off_int_poles(double re, double im) {
  return std::fabs(im) > 0.05 || re > 0.05 || dist_to_nearest_int(re) > 0.05;
}

// Closed-form divisor lists for the modular group (the independent oracle of
// the catalog checks).
inline std::map<std::pair<long, long>, long> expected_selberg_catalog(long lo, long hi) {
  std::map<std::pair<long, long>, long> expect;
  if (lo <= 1 && 1 <= hi) expect[{1, 1}] = 1;
  if (lo <= 0 && 0 <= hi) expect[{0, 1}] = -1;
  for (long k = 0;; ++k) {
    Rat s0 = Rat(1, 2) - Rat(k);
    if (s0 < Rat(lo)) break;
    if (s0 <= Rat(hi)) expect[{s0.num, s0.den}] = -1;
  }
  for (long k = 0;; ++k) {
    bool any = false;
    for (long j : {1L, 2L, 3L, 4L, 6L}) {
      long s0 = -6 * k - j;
      if (s0 < lo) continue;
      any = true;
      if (s0 <= hi) expect[{s0, 1}] += 2 * k + 1;
    }
    if (-6 * k - 5 >= lo) {
      any = true;
      if (-6 * k - 5 <= hi) expect[{-6 * k - 5, 1}] += 2 * k + 3;
    }
    if (!any) break;
  }
  return expect;
}

inline std::map<std::pair<long, long>, long> expected_higher_catalog(long lo, long hi) {
  std::map<std::pair<long, long>, long> expect;
  if (lo <= 0 && 0 <= hi) expect[{0, 1}] = -1;
  for (long k = 0;; ++k) {
    Rat s0 = Rat(-1, 2) - Rat(k);
    if (s0 < Rat(lo)) break;
    if (s0 <= Rat(hi)) expect[{s0.num, s0.den}] = k + 1;
  }
  for (long k = 0;; ++k) {
    bool any = false;
    for (long j = 2; j <= 7; ++j) {
      long s0 = -6 * k - j;
      if (s0 < lo) continue;
      any = true;
      if (s0 <= hi)
        expect[{s0, 1}] = -(6 * k * k + 2 * j * k + j + (j >= 6 ? 1 : -1));
    }
    if (!any) break;
  }
  return expect;
}

inline std::map<std::pair<long, long>, long> rational_entries(
    const std::vector<DivisorEntry>& cat) {
  std::map<std::pair<long, long>, long> got;
  for (const auto& e : cat)
    if (e.kind == DivisorEntry::Kind::Rational)
      got[{e.location.num, e.location.den}] = e.order;
  return got;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Report verify_multigamma(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "multigamma";
  Real tol_rec = Real::pow2(-(ctx.prec_bits - 40), wp);  // 2^-152 at 192 bits
  SeededSampler rng(opt.seed);

  Real worst2(wp), worst3(wp);
  for (int i = 0; i < 50; ++i) {
    Cplx z = rng.cplx_in_box(-10.0, 10.0, -10.0, 10.0, wp, detail::off_int_poles);
    worst2 = max(worst2, rel_dist(gamma2_fn(z, wp), gamma2_fn(z + 1L, wp) * gamma_fn(z, wp)));
    worst3 = max(worst3, rel_dist(gamma3_fn(z, wp), gamma3_fn(z + 1L, wp) * gamma2_fn(z, wp)));
  }
  rep.check("gamma2-recurrence-50pts", worst2, tol_rec);
  rep.check("gamma3-recurrence-50pts", worst3, tol_rec);

  rep.check("gamma2(4)=1/2",
            abs(gamma2_fn(ctx.cplx(4.0), wp) - Cplx::of(0.5, 0.0, wp)),
            Real::of(1e-40, wp));
  rep.check("gamma3(5)=2",
            abs(gamma3_fn(ctx.cplx(5.0), wp) - Cplx::of(2.0, 0.0, wp)),
            Real::of(1e-40, wp));

  for (long m : {2L, 3L, 5L}) {
    Real w1(wp), w2(wp);
    for (int i = 0; i < 20; ++i) {
      Cplx z = rng.cplx_in_box(-6.0, 6.0, 0.2, 6.0, wp, nullptr);
      w1 = max(w1, mult_residual(MultiGammaOrder::Gamma1, z, m, ctx));
      w2 = max(w2, mult_residual(MultiGammaOrder::Gamma2, z, m, ctx));
    }
    rep.check("mult-gamma-m" + std::to_string(m), w1, tol_rec);
    rep.check("mult-gamma2-m" + std::to_string(m), w2, tol_rec);
  }

  Real tol25 = Real::of(1e-25, wp);
  for (long l : {1L, 2L, 3L, 5L}) {
    Real worst(wp);
    for (int i = 0; i < 10; ++i) {
      Cplx z = rng.cplx_in_box(0.3, 6.0, 0.2, 3.0, wp, nullptr);
      worst = max(worst, dgamma_product_residual(l, z, ctx));
    }
    rep.check("dgamma-product-l" + std::to_string(l), worst, tol25);
  }

  // pole-order ratio probes
  bool probe_ok = true;
  for (auto [level, z0] : {std::pair{MultiGammaOrder::Gamma2, -4L},
                           std::pair{MultiGammaOrder::Gamma3, -2L}}) {
    long d = pole_order(level, Rat(z0));
    auto eval = [&](double eps) {
      Cplx z = ctx.cplx(static_cast<double>(z0) + eps);
      Cplx g = level == MultiGammaOrder::Gamma2 ? gamma2_fn(z, wp) : gamma3_fn(z, wp);
      return abs(g) * pow(ctx.real(eps), d);
    };
    Real a = eval(1e-6), b = eval(1e-7);
    probe_ok = probe_ok && a / b < 2.0 && b / a < 2.0 && a > 0.0;
  }
  rep.check_exact("pole-order-ratio-probe", probe_ok);
  return rep;
}

inline Report verify_dirichlet(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "dirichlet";
  SeededSampler rng(opt.seed);
  Real pi = Real::pi(wp);

  rep.check("L(2,chi0)=pi^2/6",
            abs(dirichlet_l(ctx.cplx(2.0), DirichletCharacter(1), wp).re - pi * pi / 6L),
            Real::of(1e-30, wp));
  auto chi4 = enumerate_characters(4)[1];
  rep.check("L(2,chi4)=catalan",
            abs(dirichlet_l(ctx.cplx(2.0), chi4, wp).re - detail::catalan_cvz(wp)),
            Real::of(1e-30, wp));
  rep.check("L(1,chi4)=pi/4", abs(dirichlet_l(ctx.cplx(1.0), chi4, wp).re - pi / 4L),
            Real::of(1e-30, wp));

  // functional equation over conductors 1, 3, 4, 5
  Real tol25 = Real::of(1e-25, wp);
  for (long q : {1L, 3L, 4L, 5L}) {
    Real worst(wp);
    for (auto& c : primitive_characters(q)) {
      Cplx eps = root_number(c, wp);
      auto cc = c.conjugate();
      for (int i = 0; i < 10; ++i) {
        Cplx s = rng.cplx_in_box(-2.0, 3.0, 0.15, 3.0, wp, nullptr);
        worst = max(worst, abs(xi_complete(s, c, wp) - eps * xi_complete(1L - s, cc, wp)));
      }
    }
    rep.check("xi-functional-eq-q" + std::to_string(q), worst, tol25);
  }

  // Euler products at Re s = 3
  Real worst_ep(wp);
  for (long q : {1L, 4L, 5L}) {
    for (auto& c : enumerate_characters(q)) {
      Cplx prod = Cplx::of(1.0, 0.0, wp);
      for (long p : primes_below(10000)) {
        auto t = c.value_angle(p);
        if (!t) continue;
        prod = prod / (1L - root_of_unity(*t, wp) *
                                exp(-3.0 * log(Cplx::of(Real::of(p, wp)))));
      }
      worst_ep = max(worst_ep, abs(dirichlet_l(ctx.cplx(3.0), c, wp) - prod));
    }
  }
  rep.check("euler-product-res3", worst_ep, Real::of(1e-9, wp));

  // orthogonality (exact root-of-unity arithmetic; numeric echo)
  Real worst_orth(wp);
  for (long q : {3L, 4L, 5L, 8L, 12L}) {
    for (auto& c : enumerate_characters(q)) {
      if (c.is_principal()) continue;
      Cplx sum(wp);
      for (long a = 0; a < q; ++a) sum += c.value(a, wp);
      worst_orth = max(worst_orth, abs(sum));
    }
  }
  rep.check("orthogonality", worst_orth, Real::pow2(-(ctx.prec_bits + 30), wp));

  // bundled zero list
  try {
    ZeroList zl = load_zero_list(opt.data_dir + "/zeta_zeros_100.txt", wp);
    rep.check("zero-list-first-entry",
              abs(zl.ordinates[0] - Real::from_string("14.134725141734", wp)),
              Real::of(1e-6, wp));
    Real worst_l(wp);
    DirichletCharacter chi0(1);
    for (int n = 0; n < 10; ++n)
      worst_l = max(worst_l, abs(dirichlet_l(Cplx(Real::of(0.5, wp), zl.ordinates[n]),
                                             chi0, wp)));
    rep.check("L-small-at-first-10-zeros", worst_l, Real::of(1e-6, wp));
  } catch (const MathError& e) {
    rep.skip("zero-list-first-entry", std::string("no bundled list: ") + e.what());
  }
  return rep;
}

inline Report verify_scattering(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "scattering";
  SeededSampler rng(opt.seed);

  bool counts_ok = true;
  for (long N = 1; N <= 60 && counts_ok; ++N)
    for (auto fam : {GroupFamily::Gamma0, GroupFamily::Gamma1, GroupFamily::GammaFull})
      counts_ok = counts_ok && enumerate_pairs(fam, N).size() ==
                                   static_cast<size_t>(cusp_count(fam, N));
  rep.check_exact("pair-counts-vs-cusp-oracle-N<=60", counts_ok);

  auto sl2 = group_data(GroupFamily::Gamma0, 1, std::nullopt, ctx);
  rep.check_exact("modular-group-kappa-A", sl2.kappa == 1 && sl2.a_exact == 1 &&
                                               sl2.kappa0 && *sl2.kappa0 == 1);

  Real tol25 = Real::of(1e-25, wp);
  for (long N : {1L, 2L, 3L, 4L, 6L}) {
    auto g = group_data(
        GroupFamily::Gamma0, N,
        N == 1 ? std::nullopt : std::optional<long>(cusp_count(GroupFamily::Gamma0, N)),
        ctx);
    Real worst(wp);
    for (int i = 0; i < 10; ++i) {
      Cplx s = rng.cplx_in_box(-1.0, 2.0, 0.25, 2.0, wp, nullptr);
      Cplx prod = scattering_det(s, g, ctx) * scattering_det(1L - s, g, ctx);
      worst = max(worst, abs(prod - Cplx::of(1.0, 0.0, wp)));
    }
    rep.check("phi-antisymmetry-N" + std::to_string(N), worst, tol25);
  }

  // Gauss-Bonnet across the table
  Real pi = Real::pi(wp);
  Real worst_gb(wp);
  for (long N = 1; N <= 60; N += (N < 12 ? 1 : 7)) {
    for (auto fam : {GroupFamily::Gamma0, GroupFamily::Gamma1, GroupFamily::GammaFull}) {
      auto g = group_data(fam, N, std::nullopt, ctx);
      Real rhs = 2L * pi *
                 (Real::of(2 * g.genus - 2 + g.kappa, wp) + Real::ratio(g.nu2, 2, wp) +
                  Real::ratio(2 * g.nu3, 3, wp));
      worst_gb = max(worst_gb, abs(g.volume - rhs));
    }
  }
  rep.check("gauss-bonnet", worst_gb, Real::of(1e-12, wp));
  return rep;
}

inline Report verify_selberg_factors(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "selberg-factors";
  auto g = group_data(GroupFamily::Gamma0, 1, std::nullopt, ctx);
  Real tol25 = Real::of(1e-25, wp);
  Real two_pi = 2L * Real::pi(wp);
  Real pi = Real::pi(wp);

  rep.check("xi_I(1)=(2pi)^{1/6}",
            abs(xi_I(ctx.cplx(1.0), g, ctx) - Cplx::of(pow(two_pi, Real::ratio(1, 6, wp)))),
            tol25);
  Real third = Real::ratio(1, 3, wp);
  Real ell1 = exp(Real::ratio(-1, 4, wp) * log(pi) -
                  Real::ratio(2, 3, wp) * log_gamma(Cplx::of(third), wp).re);
  rep.check("xi_ell(1)=pi^{-1/4}Gamma(1/3)^{-2/3}",
            abs(xi_ell(ctx.cplx(1.0), g, ctx) - Cplx::of(ell1)), tol25);
  rep.check("xi_par(1)=6*pi^{-3/2}",
            abs(xi_par(ctx.cplx(1.0), g, ctx) - Cplx::of(6L / (pi * sqrt(pi)))), tol25);
  Cplx inv = xi_par(ctx.cplx(0.75), g, ctx) * riemann_zeta(ctx.cplx(1.5), wp) *
             gamma_fn(ctx.cplx(1.25), wp) * gamma_fn(ctx.cplx(0.75), wp) *
             exp(Real::of(0.75, wp) * log(Real::of(2, wp) / pi));
  rep.check("xi_par-inversion-3/4", abs(inv - Cplx::of(1.0, 0.0, wp)), tol25);

  bool regular = true;
  for (double re : {1.2, 1.5, 1.9})
    for (double im : {0.0, 0.8, 1.7}) {
      Cplx s = ctx.cplx(re, im);
      for (const Cplx& v : {xi_I(s, g, ctx), xi_ell(s, g, ctx), xi_par(s, g, ctx)})
        regular = regular && v.is_finite() && abs(v) > 0.0;
    }
  rep.check_exact("factors-regular-nonvanishing-strip", regular);
  return rep;
}

inline Report verify_reflection(const VerifyOptions& opt, long only_l = 0) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "reflection";
  SeededSampler rng(opt.seed);
  Real tol25 = Real::of(1e-25, wp);
  Real pi = Real::pi(wp);
  for (long l : {1L, 2L, 3L, 5L}) {
    if (only_l && l != only_l) continue;
    Cplx lattice = 2L * hurwitz_zeta(ctx.cplx(2.0), ctx.real(0.5), wp) /
                   static_cast<long>(l * l);
    rep.check("lattice-sum-l" + std::to_string(l),
              abs(lattice - Cplx::of(pi * pi / (l * l))), tol25);
    Real worst(wp);
    for (int i = 0; i < 20; ++i) {
      Cplx s = rng.cplx_in_box(-1.5, 2.5, 0.15, 1.5, wp, nullptr);
      Cplx r = ctx.cplx(rng.uniform(0.1, 2.0));
      worst = max(worst, reflection_identity_residual(s, r, l, wp));
    }
    rep.check("reflection-l" + std::to_string(l), worst, tol25);
  }
  return rep;
}

inline Report verify_fourier(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "fourier";
  SeededSampler rng(opt.seed);
  for (long l : {1L, 2L}) {
    Real worst(wp);
    for (int i = 0; i < 5; ++i) {
      double sre = rng.uniform(1.2, 2.5);
      double r = rng.uniform(0.3, 2.0);
      Cplx s = ctx.cplx(sre);
      double decay = sre + 0.5 * l - 0.5;
      double upper = std::max(40.0, 2.0 * (std::log(1e10) + 5.0) / decay);
      Real rr = ctx.real(r);
      auto integrand = [&](const Real& u) {
        return test_g(u, s, l, wp) * Cplx::of(cos(rr * u));
      };
      Cplx quad = 2L * integrate_dyadic(integrand, upper, 32, wp);
      worst = max(worst, abs(quad - h_of_r(s, Cplx::of(rr), l, wp)));
    }
    rep.check("fourier-pair-l" + std::to_string(l), worst, ctx.tol_quad_r());
  }
  return rep;
}

inline Report verify_higher_ladders(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "higher-ladders";
  SeededSampler rng(opt.seed);
  Real tol25 = Real::of(1e-25, wp);

  for (long l : {1L, 2L, 3L}) {
    Real wf(wp), wg(wp), wi(wp), wj(wp);
    for (int i = 0; i < 10; ++i) {
      Cplx s = rng.cplx_in_box(0.5, 4.0, 0.2, 2.0, wp, nullptr);
      wf = max(wf, higher_factor_ladder_residual(HigherFactorKind::F, s, l, wp));
      wg = max(wg, higher_factor_ladder_residual(HigherFactorKind::G, s, l, wp));
      wi = max(wi, higher_factor_ladder_residual(HigherFactorKind::I, s, l, wp));
      wj = max(wj, j_l_ladder_residual(s, l, wp));
    }
    rep.check("F-ladder-l" + std::to_string(l), wf, tol25);
    rep.check("G-ladder-l" + std::to_string(l), wg, tol25);
    rep.check("I-ladder-l" + std::to_string(l), wi, tol25);
    rep.check("J-ladder-l" + std::to_string(l), wj, tol25);
  }
  {
    Real wj5(wp);
    for (int i = 0; i < 10; ++i) {
      Cplx s = rng.cplx_in_box(0.5, 4.0, 0.2, 2.0, wp, nullptr);
      wj5 = max(wj5, j_l_ladder_residual(s, 5, wp));
    }
    rep.check("J-ladder-l5", wj5, tol25);
  }
  for (long l = 1; l <= 6; ++l) {
    Real wh(wp);
    for (int i = 0; i < 5; ++i) {
      Cplx s = rng.cplx_in_box(0.5, 4.0, 0.2, 2.0, wp, nullptr);
      wh = max(wh, higher_factor_ladder_residual(HigherFactorKind::H, s, l, wp));
    }
    rep.check("H-ladder-l" + std::to_string(l), wh, tol25);
  }

  auto g = group_data(GroupFamily::Gamma0, 1, std::nullopt, ctx);
  for (long l : {1L, 2L, 3L}) {
    Real wi(wp), we(wp), wpr(wp);
    for (int i = 0; i < 5; ++i) {
      double lo = std::max(1.0 - static_cast<double>(l) + 0.3, 0.3);
      Cplx s = rng.cplx_in_box(lo, 2.5, 0.1, 1.2, wp, nullptr);
      wi = max(wi, xi_linf_ladder_residual(XiPart::I, s, l, g, ctx));
      we = max(we, xi_linf_ladder_residual(XiPart::Ell, s, l, g, ctx));
      wpr = max(wpr, xi_linf_ladder_residual(XiPart::Par, s, l, g, ctx));
    }
    rep.check("assembly-I-l" + std::to_string(l), wi, tol25);
    rep.check("assembly-ell-l" + std::to_string(l), we, tol25);
    rep.check("assembly-par-l" + std::to_string(l), wpr, tol25);
  }

  // Theta (spectral) periodicity and second log-derivative
  auto spec = synthetic_spectrum({1.0, 2.5, 7.0}, wp);
  Real worst_p(wp);
  for (long l : {1L, 2L}) {
    Cplx s = ctx.cplx(0.37, 0.21);
    worst_p = max(worst_p, abs(theta_linf(s, l, spec, ctx).value -
                               theta_linf(s + l, l, spec, ctx).value));
  }
  rep.check("Theta-periodicity-synthetic", worst_p, tol25);
  Real worst_d = max(theta_second_logderiv_residual(ctx.cplx(0.3), 1, spec, ctx),
                     theta_second_logderiv_residual(ctx.cplx(0.9, 0.4), 2, spec, ctx));
  rep.check("Theta-second-logderiv", worst_d, ctx.tol_quad_r());
  return rep;
}

inline Report verify_catalogs(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  Report rep;
  rep.suite = "catalogs";
  auto g = group_data(GroupFamily::Gamma0, 1, std::nullopt, ctx);

  auto got_s = detail::rational_entries(catalog_selberg(g, Rat(-40), Rat(1)));
  rep.check_exact("selberg-catalog-[-40,1]", got_s == detail::expected_selberg_catalog(-40, 1),
                  std::to_string(got_s.size()) + " rational entries");

  auto got_h = detail::rational_entries(catalog_higher(g, 1, Rat(-40), Rat(1)));
  rep.check_exact("higher-catalog-l1-[-40,1]",
                  got_h == detail::expected_higher_catalog(-40, 1),
                  std::to_string(got_h.size()) + " rational entries");

  // numeric-symbolic slope probes
  mpfr_prec_t wp = ctx.wprec();
  bool slopes_ok = true;
  for (double s0 : {0.0, -5.0, -0.5, -11.0}) {
    Rat loc = s0 == -0.5 ? Rat(-1, 2) : Rat(static_cast<long>(s0));
    Rat w_total = selberg_factor_orders(g, loc).total();
    auto eval = [&](double eps) {
      Cplx s = ctx.cplx(s0 + eps);
      return log(abs(xi_I(s, g, ctx) * xi_ell(s, g, ctx) * xi_par(s, g, ctx))).to_double();
    };
    double slope = (eval(1e-5) - eval(1e-6)) / (std::log(1e-5) - std::log(1e-6));
    slopes_ok = slopes_ok && std::fabs(slope - w_total.to_double()) < 0.05;
  }
  rep.check_exact("slope-probe", slopes_ok);
  return rep;
}

inline Report verify_weil(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "weil";
  ZeroList zl;
  try {
    zl = load_zero_list(opt.data_dir + "/zeta_zeros_100.txt", wp);
  } catch (const MathError& e) {
    rep.skip("weil-explicit-formula", std::string("no bundled zero list: ") + e.what());
    return rep;
  }
  DirichletCharacter chi0(1);
  HigherLContext h(1, chi0, zl, opt.weil_prime_cut);

  rep.check("prime-side-vs-dirichlet-series",
            weil_prime_side_residual(ctx.cplx(1.5), h, ctx), Real::of(1e-9, wp));
  for (double sv : {1.2, 1.5, 2.0}) {
    rep.check("weil-residual-s" + Real::of(sv, 64).str(2),
              weil_residual(ctx.cplx(sv), h, ctx), Real::of(1e-3, wp));
  }

  // the mod-4 run needs its own zero list; skip when the data is absent
  std::string chi4_path = opt.data_dir + "/chi4_zeros.txt";
  std::ifstream probe(chi4_path);
  if (probe) {
    auto chi4 = enumerate_characters(4)[1];
    HigherLContext h4(1, chi4, load_zero_list(chi4_path, wp), opt.weil_prime_cut);
    Real worst(wp);
    for (double sv : {1.2, 1.5, 2.0})
      worst = max(worst, weil_residual(ctx.cplx(sv), h4, ctx));
    rep.check("weil-residual-chi4", worst, Real::of(1e-3, wp));
  } else {
    rep.skip("weil-residual-chi4", "chi4_zeros.txt not present");
  }
  return rep;
}

inline Report verify_higher_l(const VerifyOptions& opt) {
  const PrecisionContext& ctx = opt.ctx;
  mpfr_prec_t wp = ctx.wprec();
  Report rep;
  rep.suite = "higher-l";
  SeededSampler rng(opt.seed);
  Real tol25 = Real::of(1e-25, wp);

  for (long l : {1L, 2L, 3L}) {
    Real wl(wp), wx(wp);
    for (long q : {1L, 3L, 4L}) {
      for (auto& chi : primitive_characters(q)) {
        for (int i = 0; i < 5; ++i) {
          double lo = std::max(1.0 - static_cast<double>(l) + 0.3, 0.2);
          Cplx s = rng.cplx_in_box(lo, 2.0, 0.1, 1.0, wp, nullptr);
          wl = max(wl, l_linf_ladder_residual(s, chi, l, wp));
          wx = max(wx, xi_linf_L_ladder_residual(s, chi, l, wp));
        }
      }
    }
    rep.check("L-linf-ladder-l" + std::to_string(l), wl, tol25);
    rep.check("xi-linf-ladder-l" + std::to_string(l), wx, tol25);
  }

  ZeroList zl;
  bool have_zeros = true;
  try {
    zl = load_zero_list(opt.data_dir + "/zeta_zeros_100.txt", wp);
  } catch (const MathError&) {
    have_zeros = false;
  }
  DirichletCharacter chi0(1);
  if (have_zeros) {
    Cplx rho1 = Cplx(Real::of(0.5, wp), zl.ordinates[0]);
    rep.check("xi-1inf-vanishes-at-rho1-1", abs(xi_linf_L(rho1 - 1L, chi0, 1, wp)),
              Real::of(1e-6, wp));

    Cplx s = ctx.cplx(0.4, 0.9);
    rep.check("theta-periodicity-bundled",
              abs(theta_linf_L(s, zl, 1, ctx).value -
                  theta_linf_L(s + 1L, zl, 1, ctx).value),
              tol25);

    Real worst_fe(wp);
    for (long l : {1L, 2L}) {
      HigherLContext h(l, chi0, zl);
      for (double sv : {0.3, -0.2, 0.6, 0.1, -0.4}) {
        Cplx sp = ctx.cplx(sv, 0.2);
        worst_fe = max(worst_fe, functional_eq_L_residual(sp, h, ctx));
      }
    }
    rep.check("hat-xi-functional-eq-2nd-diff", worst_fe, ctx.tol_trunc_r());

    HigherLContext h1(1, chi0, zl);
    AffineFit fit = affine_fit_hat_xi(ctx.cplx(0.25, 0.1), 0.1, 5, h1, ctx);
    rep.check("hat-xi-affine-fit", fit.max_dev, ctx.tol_trunc_r(),
              "a~" + fit.a.str(6) + " b~" + fit.b.str(6));
  } else {
    rep.skip("xi-1inf-vanishes-at-rho1-1", "no bundled zero list");
    rep.skip("theta-periodicity-bundled", "no bundled zero list");
    rep.skip("hat-xi-functional-eq-2nd-diff", "no bundled zero list");
    rep.skip("hat-xi-affine-fit", "no bundled zero list");
  }
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"multigamma", "dirichlet",      "scattering", "selberg-factors",
          "higher-ladders", "reflection", "fourier",    "catalogs",
          "weil",       "higher-l",       "all"};
}

inline Report run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "multigamma") return verify_multigamma(opt);
  if (name == "dirichlet") return verify_dirichlet(opt);
  if (name == "scattering") return verify_scattering(opt);
  if (name == "selberg-factors") return verify_selberg_factors(opt);
  if (name == "higher-ladders") return verify_higher_ladders(opt);
  if (name == "reflection") return verify_reflection(opt);
  if (name == "fourier") return verify_fourier(opt);
  if (name == "catalogs") return verify_catalogs(opt);
  if (name == "weil") return verify_weil(opt);
  if (name == "higher-l") return verify_higher_l(opt);
  if (name == "all") {
    Report all;
    all.suite = "all";
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      all.merge(run_suite(n, opt));
    }
    return all;
  }
  throw DomainError("unknown suite: " + name);
}

}  // namespace selzeta
