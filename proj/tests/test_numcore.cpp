#include "doctest.h"

#include "selzeta/numcore.hpp"
#include "selzeta/util.hpp"
#include "oracles.hpp"

using namespace selzeta;

namespace {
const PrecisionContext ctx;  // 192-bit default
const mpfr_prec_t wp = ctx.wprec();

bool leq_tol(const Real& r, const Real& tol) { return r <= tol; }
}  // namespace

TEST_CASE("hurwitz zeta: zeta(2) family against brute-force oracles") {
  // oracle values first (Richardson-extrapolated partial sums)
  Real z2_oracle = oracles::zeta2_brute(wp);
  Real pi = Real::pi(wp);
  Real closed = pi * pi / 6L;
  CHECK(abs(z2_oracle - closed) < Real::of(1e-25, wp));

  Cplx got = hurwitz_zeta(ctx.cplx(2.0), ctx.real(1.0), wp);
  CHECK(leq_tol(abs(got.re - closed), ctx.tol_closed()));
  CHECK((got.im.is_zero() || leq_tol(abs(got.im), ctx.tol_closed())));

  // (s=2, a=1/2) -> pi^2/2 by the odd-term splitting oracle
  Real zh_oracle = oracles::zeta2_half_brute(wp);
  Real closed_h = pi * pi / 2L;
  CHECK(abs(zh_oracle - closed_h) < Real::of(1e-25, wp));
  Cplx got_h = hurwitz_zeta(ctx.cplx(2.0), ctx.real(0.5), wp);
  CHECK(leq_tol(abs(got_h.re - closed_h), ctx.tol_closed()));
}

TEST_CASE("hurwitz zeta at a=1 equals riemann zeta (definitional)") {
  Cplx s = ctx.cplx(3.0, 4.0);
  Cplx a = hurwitz_zeta(s, ctx.real(1.0), wp);
  Cplx b = riemann_zeta(s, wp);
  CHECK(leq_tol(rel_dist(a, b), ctx.tol_closed()));
}

TEST_CASE("riemann zeta special points") {
  // s=0 -> -1/2 (also via MPFR's independent real zeta)
  Cplx z0 = riemann_zeta(ctx.cplx(0.0), wp);
  CHECK(leq_tol(abs(z0.re + 0.5), ctx.tol_closed()));
  CHECK(leq_tol(abs(z0.re - real_zeta(ctx.real(0.0))), ctx.tol_closed()));

  // s=-2 -> 0 (trivial zero; functional-equation oracle gives exactly 0)
  Real fe = oracles::zeta_functional_eq(-2.0, wp);
  CHECK(abs(fe) < Real::of(1e-40, wp));
  Cplx zm2 = riemann_zeta(ctx.cplx(-2.0), wp);
  CHECK(leq_tol(abs(zm2), ctx.tol_closed()));

  // pole at s=1
  CHECK_THROWS_AS(riemann_zeta(ctx.cplx(1.0), wp), PoleAtOne);
}

TEST_CASE("hurwitz zeta: shift identity zeta(s,a) - zeta(s,a+1) = a^-s") {
  SeededSampler rng;
  for (int i = 0; i < 10; ++i) {
    Cplx s = rng.cplx_in_box(-3.0, 4.0, -4.0, 4.0, wp, [](double re, double) {
      return std::fabs(re - 1.0) > 0.1;
    });
    double av = rng.uniform(0.05, 6.0);
    Real a = ctx.real(av);
    Cplx lhs = hurwitz_zeta(s, a, wp) - hurwitz_zeta(s, a + 1L, wp);
    Cplx rhs = exp(-1L * s * log(Cplx::of(a)));
    CHECK(leq_tol(rel_dist(rhs, lhs), ctx.tol_closed()));
  }
}

TEST_CASE("hurwitz zeta domain errors") {
  CHECK_THROWS_AS(hurwitz_zeta(ctx.cplx(2.0), ctx.real(0.0), wp), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ctx.cplx(2.0), ctx.real(-1.5), wp), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ctx.cplx(1.0), ctx.real(1.0), wp), PoleAtOne);
}

TEST_CASE("log gamma special values") {
  CHECK(leq_tol(abs(log_gamma(ctx.cplx(1.0), wp)), ctx.tol_closed()));
  Cplx lg_half = log_gamma(ctx.cplx(0.5), wp);
  CHECK(leq_tol(abs(lg_half.re - log(Real::pi(wp)) * 0.5), ctx.tol_closed()));
  Cplx lg5 = log_gamma(ctx.cplx(5.0), wp);
  CHECK(leq_tol(abs(lg5.re - log(ctx.real(24.0))), ctx.tol_closed()));
  CHECK_THROWS_AS(log_gamma(ctx.cplx(0.0), wp), PoleError);
  CHECK_THROWS_AS(log_gamma(ctx.cplx(-3.0), wp), PoleError);
}

TEST_CASE("gamma recurrence and reflection properties") {
  SeededSampler rng;
  for (int i = 0; i < 50; ++i) {
    Cplx z = rng.cplx_in_box(-20.0, 20.0, -20.0, 20.0, wp, [](double re, double im) {
      return std::fabs(im) > 0.05 || dist_to_nearest_int(re) > 0.05;
    });
    Cplx lhs = gamma_fn(z + 1L, wp);
    Cplx rhs = z * gamma_fn(z, wp);
    CHECK(leq_tol(rel_dist(lhs, rhs), ctx.tol_closed()));
  }
  Real pi = Real::pi(wp);
  for (int i = 0; i < 20; ++i) {
    Cplx z = rng.cplx_in_box(-8.0, 8.0, -8.0, 8.0, wp, [](double re, double im) {
      return std::fabs(im) > 0.05 || dist_to_nearest_int(re) > 0.05;
    });
    Cplx prod = gamma_fn(z, wp) * gamma_fn(1L - z, wp) * sin(Cplx::of(pi) * z) / pi;
    CHECK(leq_tol(rel_dist(Cplx::of(1.0, 0.0, wp), prod), ctx.tol_closed()));
  }
}

TEST_CASE("digamma agrees with classical values") {
  const Constants& c = constants(ctx);
  Cplx psi1 = digamma(ctx.cplx(1.0), wp);
  CHECK(leq_tol(abs(psi1.re + c.euler_gamma), ctx.tol_closed()));
  // psi(1/2) = -gamma - 2 log 2
  Cplx psih = digamma(ctx.cplx(0.5), wp);
  Real expect = -c.euler_gamma - 2L * log(ctx.real(2.0));
  CHECK(leq_tol(abs(psih.re - expect), ctx.tol_closed()));
}

TEST_CASE("von mangoldt") {
  CHECK(von_mangoldt(1, wp).is_zero());
  CHECK(von_mangoldt(6, wp).is_zero());
  CHECK(leq_tol(abs(von_mangoldt(8, wp) - log(ctx.real(2.0))), ctx.tol_closed()));
  CHECK(leq_tol(abs(von_mangoldt(9, wp) - log(ctx.real(3.0))), ctx.tol_closed()));
  CHECK(leq_tol(abs(von_mangoldt(997, wp) - log(ctx.real(997.0))), ctx.tol_closed()));
  CHECK(von_mangoldt(1000, wp).is_zero());  // 2^3 * 5^3
  CHECK_THROWS_AS(von_mangoldt(0, wp), DomainError);
}

TEST_CASE("constants block") {
  const Constants& c = constants(ctx);

  // euler gamma against the harmonic-sum extrapolation oracle
  Real g_oracle = oracles::euler_gamma_brute(wp);
  CHECK(abs(g_oracle - c.euler_gamma) < Real::of(1e-25, wp));
  CHECK(leq_tol(abs(c.euler_gamma - Real::from_string("0.5772156649015328606065120900824024310421593359399", wp)),
                Real::of(1e-45, wp)));

  // zeta'(0) = -(1/2) log 2pi (Lerch), digits pinned off the closed form
  CHECK(leq_tol(abs(c.zeta_prime_0 + c.log_2pi * 0.5), ctx.tol_closed()));
  CHECK(leq_tol(abs(c.zeta_prime_0 -
                    Real::from_string("-0.9189385332046727417803297364056176398613974736377834128", wp)),
                Real::of(1e-45, wp)));

  // log A = 1/12 - zeta'(-1); digits certified below by the limit-definition
  // oracle and the functional-equation identity
  CHECK(leq_tol(abs(c.log_glaisher -
                    Real::from_string("0.248754477033784262547252993576113976097369713668535117", wp)),
                Real::of(1e-45, wp)));
  CHECK(leq_tol(abs(c.zeta_prime_m1 - (Real::ratio(1, 12, wp) - c.log_glaisher)), ctx.tol_closed()));

  // limit-definition cross-check (N=2000, 3-point Richardson) to 1e-8
  Real la_limit = oracles::log_glaisher_limit(2000, wp);
  CHECK(abs(la_limit - c.log_glaisher) < Real::of(1e-8, wp));

  // functional-equation identity at s=-1:
  // zeta'(-1) = zeta(-1) [log 2pi - 1 + gamma - zeta'(2)/zeta(2)]
  RealJet j2 = zeta_jet(ctx.real(2.0), wp);
  Real rhs = Real::ratio(-1, 12, wp) *
             (c.log_2pi - 1L + c.euler_gamma - j2.der / j2.val);
  CHECK(leq_tol(abs(c.zeta_prime_m1 - rhs), ctx.tol_closed()));
}

TEST_CASE("zeta jet derivative consistency") {
  // jet value = zeta value; derivative via the jet equals central difference
  RealJet j2 = zeta_jet(ctx.real(2.0), wp);
  Cplx z2 = riemann_zeta(ctx.cplx(2.0), wp);
  CHECK(leq_tol(abs(j2.val - z2.re), ctx.tol_closed()));
  Real h = Real::pow2(-64, wp);
  RealJet jp = zeta_jet(ctx.real(2.0) + h, wp);
  RealJet jm = zeta_jet(ctx.real(2.0) - h, wp);
  Real fd = (jp.val - jm.val) / (2L * h);
  CHECK(abs(fd - j2.der) < Real::pow2(-100, wp));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(2, wp) == Real::ratio(1, 6, wp));
  CHECK(bernoulli(4, wp) == Real::ratio(-1, 30, wp));
  CHECK(bernoulli(12, wp) == Real::ratio(-691, 2730, wp));
  CHECK(bernoulli(3, wp).is_zero());
}
