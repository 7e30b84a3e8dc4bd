#include "doctest.h"

#include "selzeta/multigamma.hpp"
#include "selzeta/util.hpp"

using namespace selzeta;

namespace {
const PrecisionContext ctx;
const mpfr_prec_t wp = ctx.wprec();

bool off_poles(double re, double im) {
  return std::fabs(im) > 0.05 || re > 0.05 || dist_to_nearest_int(re) > 0.05;
}
}  // namespace

TEST_CASE("gamma2 normalization and exact ladder values") {
  CHECK(abs(log_gamma2(ctx.cplx(1.0), wp)) <= ctx.tol_closed());
  // recurrence unroll: Gamma2(2)=1, Gamma2(3)=1, Gamma2(4)=1/2
  CHECK(abs(gamma2_fn(ctx.cplx(2.0), wp) - Cplx::of(1.0, 0.0, wp)) <= ctx.tol_closed());
  CHECK(abs(gamma2_fn(ctx.cplx(3.0), wp) - Cplx::of(1.0, 0.0, wp)) <= ctx.tol_closed());
  Cplx g24 = gamma2_fn(ctx.cplx(4.0), wp);
  CHECK(abs(g24 - Cplx::of(0.5, 0.0, wp)) <= Real::of(1e-40, wp));
  // recurrence self-consistency at the half-integer: Gamma2(3/2) = Gamma2(1/2)/Gamma(1/2)
  Cplx lhs = gamma2_fn(ctx.cplx(1.5), wp);
  Cplx rhs = gamma2_fn(ctx.cplx(0.5), wp) / gamma_fn(ctx.cplx(0.5), wp);
  CHECK(rel_dist(lhs, rhs) <= ctx.tol_closed());
}

TEST_CASE("gamma3 normalization and exact ladder values") {
  CHECK(abs(log_gamma3(ctx.cplx(1.0), wp)) <= ctx.tol_closed());
  // Gamma3(2)=Gamma3(3)=Gamma3(4)=1, Gamma3(5) = 1/Gamma2(4) = 2
  for (double z : {2.0, 3.0, 4.0})
    CHECK(abs(gamma3_fn(ctx.cplx(z), wp) - Cplx::of(1.0, 0.0, wp)) <= ctx.tol_closed());
  CHECK(abs(gamma3_fn(ctx.cplx(5.0), wp) - Cplx::of(2.0, 0.0, wp)) <= Real::of(1e-40, wp));
  // recurrence self-consistency at a generic complex point
  Cplx z = ctx.cplx(2.0, 3.0);
  Cplx lhs = gamma3_fn(z + 1L, wp) * gamma2_fn(z, wp);
  Cplx rhs = gamma3_fn(z, wp);
  CHECK(rel_dist(rhs, lhs) <= ctx.tol_closed());
}

TEST_CASE("recurrence suite at 50 seeded points") {
  SeededSampler rng;
  for (int i = 0; i < 50; ++i) {
    Cplx z = rng.cplx_in_box(-10.0, 10.0, -10.0, 10.0, wp, off_poles);
    Cplx lhs2 = gamma2_fn(z + 1L, wp) * gamma_fn(z, wp);
    Cplx rhs2 = gamma2_fn(z, wp);
    CHECK(rel_dist(rhs2, lhs2) <= ctx.tol_closed());
    Cplx lhs3 = gamma3_fn(z + 1L, wp) * gamma2_fn(z, wp);
    Cplx rhs3 = gamma3_fn(z, wp);
    CHECK(rel_dist(rhs3, lhs3) <= ctx.tol_closed());
  }
}

TEST_CASE("recurrences at large imaginary argument") {
  // exercises the grown product cutoff and cached tail coefficients
  for (double im : {25.0, 60.0}) {
    Cplx z = ctx.cplx(0.3, im);
    CHECK(rel_dist(gamma2_fn(z, wp), gamma2_fn(z + 1L, wp) * gamma_fn(z, wp)) <=
          ctx.tol_closed());
    CHECK(rel_dist(gamma3_fn(z, wp), gamma3_fn(z + 1L, wp) * gamma2_fn(z, wp)) <=
          ctx.tol_closed());
  }
}

TEST_CASE("multiplication constants") {
  MultConstants one = mult_constants(1, ctx);
  CHECK(abs(one.k1 - 1L) <= ctx.tol_closed());
  CHECK(abs(one.k2 - 1L) <= ctx.tol_closed());

  // m=2: k1 = (4 pi)^{-1/2}; k2 = A^-3 e^{1/4} (2pi)^{-1/2} 2^{-5/12}
  MultConstants two = mult_constants(2, ctx);
  Real pi = Real::pi(wp);
  CHECK(abs(two.k1 - 1L / sqrt(4L * pi)) <= ctx.tol_closed());
  const Constants& c = constants_wp(wp);
  Real k2_ref = exp(-3L * c.log_glaisher) * exp(Real::ratio(1, 4, wp)) /
                sqrt(2L * pi) / exp(Real::ratio(5, 12, wp) * log(ctx.real(2.0)));
  CHECK(abs(two.k2 - k2_ref) <= ctx.tol_closed() * k2_ref);
}

TEST_CASE("multiplication formula residuals") {
  // Legendre duplication at z=1: Gamma(1) = (2pi)^{-1/2} 2^{-1/2} 2 Gamma(1/2) Gamma(1)
  CHECK(mult_residual(MultiGammaOrder::Gamma1, ctx.cplx(1.0), 2, ctx) <= ctx.tol_closed());
  CHECK(mult_residual(MultiGammaOrder::Gamma2, ctx.cplx(2.3, 0.7), 3, ctx) <= ctx.tol_closed());
  CHECK(mult_residual(MultiGammaOrder::Gamma1, ctx.cplx(4.0), 5, ctx) <= ctx.tol_closed());

  SeededSampler rng;
  for (long m : {2L, 3L, 5L}) {
    for (int i = 0; i < 20; ++i) {
      Cplx z = rng.cplx_in_box(-6.0, 6.0, -6.0, 6.0, wp, [m](double re, double im) {
        if (std::fabs(im) > 0.2) return true;
        // keep (z+j)/m and (z+j1+j2)/m off nonpositive integers
        for (long j = 0; j <= 2 * (m - 1); ++j) {
          double a = (re + j) / static_cast<double>(m);
          if (a < 0.1 && dist_to_nearest_int(a) < 0.1) return false;
        }
        return re > 0.1 || dist_to_nearest_int(re) > 0.1;
      });
      CHECK(mult_residual(MultiGammaOrder::Gamma1, z, m, ctx) <= ctx.tol_closed());
      CHECK(mult_residual(MultiGammaOrder::Gamma2, z, m, ctx) <= ctx.tol_closed());
    }
  }
  CHECK_THROWS_AS(mult_residual(MultiGammaOrder::Gamma3, ctx.cplx(2.0), 2, ctx),
                  UnsupportedError);
}

TEST_CASE("double-gamma product identity (l in {1,2,3,5})") {
  SeededSampler rng;
  for (long l : {1L, 2L, 3L, 5L}) {
    for (int i = 0; i < 10; ++i) {
      Cplx z = rng.cplx_in_box(0.3, 6.0, -3.0, 3.0, wp, [](double re, double im) {
        return std::fabs(im) > 0.1 || re > 0.2;
      });
      CHECK(dgamma_product_residual(l, z, ctx) <= Real::of(1e-25, wp));
    }
  }
}

TEST_CASE("pole orders") {
  CHECK(pole_order(MultiGammaOrder::Gamma2, Rat(0)) == 1);
  CHECK(pole_order(MultiGammaOrder::Gamma3, Rat(-2)) == 6);
  CHECK(pole_order(MultiGammaOrder::Gamma1, Rat(1, 2)) == 0);
  CHECK(pole_order(MultiGammaOrder::Gamma1, Rat(-7)) == 1);
  CHECK(pole_order(MultiGammaOrder::Gamma2, Rat(-5)) == 6);
  CHECK(pole_order(MultiGammaOrder::Gamma3, Rat(-5)) == 21);
  CHECK(pole_order(MultiGammaOrder::Gamma3, Rat(2)) == 0);

  // numeric probe: |Gamma_level(z0+eps)| * eps^order bounded and away from 0
  for (auto [level, z0] : {std::pair{MultiGammaOrder::Gamma1, -3L},
                           std::pair{MultiGammaOrder::Gamma2, -4L},
                           std::pair{MultiGammaOrder::Gamma3, -2L}}) {
    long d = pole_order(level, Rat(z0));
    auto eval = [&](double eps) {
      Cplx z = ctx.cplx(static_cast<double>(z0) + eps);
      Cplx g = level == MultiGammaOrder::Gamma1   ? gamma_fn(z, wp)
               : level == MultiGammaOrder::Gamma2 ? gamma2_fn(z, wp)
                                                  : gamma3_fn(z, wp);
      return abs(g) * pow(ctx.real(eps), d);
    };
    Real a = eval(1e-6), b = eval(1e-7);
    CHECK(a / b < 2.0);
    CHECK(b / a < 2.0);
    CHECK(a > 0.0);
  }

  // PoleError carries the order
  try {
    log_gamma2(ctx.cplx(-3.0), wp);
    CHECK(false);
  } catch (const PoleError& e) {
    CHECK(e.order == 4);
  }
  try {
    log_gamma3(ctx.cplx(-5.0), wp);
    CHECK(false);
  } catch (const PoleError& e) {
    CHECK(e.order == 21);
  }
}
