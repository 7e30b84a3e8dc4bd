#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "selzeta/dirichlet.hpp"
#include "selzeta/util.hpp"
#include "selzeta/zeros.hpp"
#include "oracles.hpp"

using namespace selzeta;

namespace {
const PrecisionContext ctx;
const mpfr_prec_t wp = ctx.wprec();
const std::string kDataDir = SELZETA_SOURCE_DATA_DIR;

DirichletCharacter chi4() { return enumerate_characters(4)[1]; }
}  // namespace

TEST_CASE("character enumeration counts and structure") {
  CHECK(enumerate_characters(1).size() == 1);
  CHECK(enumerate_characters(1)[0].is_principal());

  auto m4 = enumerate_characters(4);
  REQUIRE(m4.size() == 2);
  CHECK(m4[0].is_principal());
  auto t = m4[1].value_angle(3);
  REQUIRE(t.has_value());
  CHECK(*t == Rat(1, 2));  // chi(3) = -1

  auto m5 = enumerate_characters(5);
  REQUIRE(m5.size() == 4);
  // (Z/5)^x cyclic of order 4: character orders are {1,4,2,4}
  int order4 = 0, order2 = 0, order1 = 0;
  for (auto& c : m5) {
    long ord = 1;
    auto tv = c.value_angle(2);  // generator
    REQUIRE(tv.has_value());
    if (tv->num != 0) ord = tv->den;
    if (ord == 1) ++order1;
    if (ord == 2) ++order2;
    if (ord == 4) ++order4;
  }
  CHECK(order1 == 1);
  CHECK(order2 == 1);
  CHECK(order4 == 2);

  // phi sanity
  CHECK(enumerate_characters(8).size() == 4);
  CHECK(enumerate_characters(60).size() == 16);
}

TEST_CASE("conductor, primitivity, parity") {
  DirichletCharacter p6(6);
  CHECK(p6.conductor() == 1);
  CHECK(p6.parity() == 0);
  CHECK(!p6.is_primitive());

  auto c4 = chi4();
  CHECK(c4.conductor() == 4);
  CHECK(c4.is_primitive());
  CHECK(c4.parity() == 1);

  // mod-8 character with chi(3) = chi(5) = -1 has conductor 8
  bool found = false;
  for (auto& c : enumerate_characters(8)) {
    auto t3 = c.value_angle(3);
    auto t5 = c.value_angle(5);
    if (t3 && t5 && *t3 == Rat(1, 2) && *t5 == Rat(1, 2)) {
      found = true;
      CHECK(c.conductor() == 8);
      CHECK(c.is_primitive());
    }
  }
  CHECK(found);

  // primitive counts: mod 5 has 3, mod 8 has 2, mod 9 has 4
  CHECK(primitive_characters(5).size() == 3);
  CHECK(primitive_characters(8).size() == 2);
  CHECK(primitive_characters(9).size() == 4);

  // primitive_part: the mod-12 character induced by chi4 pulls back
  auto c12 = combine(c4, DirichletCharacter(1), 1, 3);
  CHECK(c12.conductor() == 4);
  auto prim = primitive_part(c12);
  CHECK(prim.modulus() == 4);
  CHECK(prim.value_angle(3) == c4.value_angle(3));
}

TEST_CASE("combine") {
  DirichletCharacter triv(1);
  auto a = combine(triv, triv, 1, 1);
  CHECK(a.modulus() == 1);
  CHECK(a.is_principal());

  auto b = combine(triv, triv, 1, 2);
  CHECK(b.modulus() == 2);
  CHECK(b.is_principal());

  auto c = combine(chi4(), triv, 1, 3);
  CHECK(c.modulus() == 12);
  CHECK(!c.value_angle(2).has_value());
  CHECK(!c.value_angle(3).has_value());
  auto t7 = c.value_angle(7);
  REQUIRE(t7.has_value());
  CHECK(*t7 == Rat(1, 2));  // chi(7) = chi4(7) * omega3(7) = -1
}

TEST_CASE("orthogonality of nonprincipal characters") {
  for (long q : {3L, 4L, 5L, 8L, 12L, 15L}) {
    for (auto& c : enumerate_characters(q)) {
      if (c.is_principal()) continue;
      // structural exactness: some generator exponent is nonzero, so that
      // component's geometric sum vanishes identically
      bool nonzero_exp = false;
      for (long e : c.exponents()) nonzero_exp |= (e != 0);
      CHECK(nonzero_exp);
      Cplx sum(wp);
      for (long a_res = 0; a_res < q; ++a_res) sum += c.value(a_res, wp);
      CHECK(abs(sum) <= Real::pow2(-(wp - 16), wp));
    }
  }
}

TEST_CASE("L-values against series oracles") {
  // L(2, chi0 mod 1) = pi^2/6
  Real pi = Real::pi(wp);
  Cplx l2 = dirichlet_l(ctx.cplx(2.0), DirichletCharacter(1), wp);
  CHECK(abs(l2.re - pi * pi / 6L) <= Real::of(1e-30, wp));

  // L(2, chi mod 4) = Catalan, via the CVZ alternating oracle
  Real catalan = oracles::cvz_alternating(
      [](long k, mpfr_prec_t p) { return Real::ratio(1, (2 * k + 1) * (2 * k + 1), p); },
      96, wp);
  CHECK(abs(catalan - Real::from_string("0.915965594177219015054603514932384110774", wp)) <
        Real::of(1e-35, wp));
  Cplx l2c = dirichlet_l(ctx.cplx(2.0), chi4(), wp);
  CHECK(abs(l2c.re - catalan) <= Real::of(1e-30, wp));

  // L(1, chi mod 4) = pi/4 (Leibniz, accelerated)
  Real leibniz = oracles::cvz_alternating(
      [](long k, mpfr_prec_t p) { return Real::ratio(1, 2 * k + 1, p); }, 96, wp);
  CHECK(abs(leibniz - pi / 4L) < Real::of(1e-35, wp));
  Cplx l1c = dirichlet_l(ctx.cplx(1.0), chi4(), wp);
  CHECK(abs(l1c.re - pi / 4L) <= Real::of(1e-30, wp));

  // pole of the principal L at s = 1
  CHECK_THROWS_AS(dirichlet_l(ctx.cplx(1.0), DirichletCharacter(1), wp), PoleAtOne);
  CHECK_THROWS_AS(dirichlet_l(ctx.cplx(1.0), DirichletCharacter(6), wp), PoleAtOne);
}

TEST_CASE("Euler product consistency at Re s = 3") {
  for (long q : {1L, 4L, 5L}) {
    for (auto& c : enumerate_characters(q)) {
      Cplx s = ctx.cplx(3.0);
      Cplx lhs = dirichlet_l(s, c, wp);
      Cplx prod = Cplx::of(1.0, 0.0, wp);
      for (long p : primes_below(10000)) {
        auto t = c.value_angle(p);
        if (!t) continue;
        Cplx factor = 1L - root_of_unity(*t, wp) * exp(-3.0 * log(Cplx::of(Real::of(p, wp))));
        prod = prod / factor;
      }
      CHECK(abs(lhs - prod) <= Real::of(1e-9, wp));
    }
  }
}

TEST_CASE("root numbers via Gauss sums") {
  CHECK(abs(root_number(DirichletCharacter(1), wp) - Cplx::of(1.0, 0.0, wp)) <=
        ctx.tol_closed());

  // tau(chi mod 4) = 2i, epsilon = 1
  Cplx tau4 = gauss_sum(chi4(), wp);
  CHECK(abs(tau4 - Cplx::of(0.0, 2.0, wp)) <= ctx.tol_closed());
  CHECK(abs(root_number(chi4(), wp) - Cplx::of(1.0, 0.0, wp)) <= ctx.tol_closed());

  // tau(chi mod 3) = i sqrt(3), epsilon = 1
  auto c3 = enumerate_characters(3)[1];
  Cplx tau3 = gauss_sum(c3, wp);
  CHECK(abs(tau3 - Cplx(Real(wp), sqrt(Real::of(3, wp)))) <= ctx.tol_closed());
  CHECK(abs(root_number(c3, wp) - Cplx::of(1.0, 0.0, wp)) <= ctx.tol_closed());

  CHECK_THROWS_AS(root_number(DirichletCharacter(6), wp), NotPrimitiveError);
}

TEST_CASE("completed xi: special values and functional equation") {
  DirichletCharacter chi0(1);
  // xi(0) = 1, xi(1) = 1 (limit values)
  CHECK(abs(xi_complete(ctx.cplx(0.0), chi0, wp) - Cplx::of(1.0, 0.0, wp)) <=
        ctx.tol_closed());
  CHECK(abs(xi_complete(ctx.cplx(1.0), chi0, wp) - Cplx::of(1.0, 0.0, wp)) <=
        ctx.tol_closed());
  // s = 1/2 is the fixed point of s -> 1-s: the residual vanishes identically
  Cplx xh = xi_complete(ctx.cplx(0.5), chi0, wp);
  Cplx xh2 = xi_complete(1L - ctx.cplx(0.5), chi0, wp);
  CHECK(abs(xh - xh2).is_zero());

  // |xi(s,chi)| = |xi(1-s, conj chi)| for the mod-4 character
  Cplx s = ctx.cplx(0.3, 2.0);
  Real lhs = abs(xi_complete(s, chi4(), wp));
  Real rhs = abs(xi_complete(1L - s, chi4().conjugate(), wp));
  CHECK(abs(lhs - rhs) <= ctx.tol_closed());

  // full functional equation xi(s,chi) = eps(chi) xi(1-s, conj chi)
  SeededSampler rng;
  for (long q : {1L, 3L, 4L, 5L}) {
    for (auto& c : primitive_characters(q)) {
      Cplx eps = root_number(c, wp);
      CHECK(abs(abs(eps) - Real::of(1, wp)) <= ctx.tol_closed());
      auto cc = c.conjugate();
      for (int i = 0; i < 10; ++i) {
        Cplx sp = rng.cplx_in_box(-2.0, 3.0, -3.0, 3.0, wp, [q](double re, double im) {
          if (q == 1 && std::fabs(im) < 0.1 &&
              (std::fabs(re) < 0.1 || std::fabs(re - 1.0) < 0.1))
            return false;
          return true;
        });
        Cplx a = xi_complete(sp, c, wp);
        Cplx b = eps * xi_complete(1L - sp, cc, wp);
        CHECK(abs(a - b) <= ctx.tol_closed());
      }
    }
  }
}

TEST_CASE("zero list: bundled file and error paths") {
  ZeroList zl = load_zero_list(kDataDir + "/zeta_zeros_100.txt", wp);
  REQUIRE(zl.ordinates.size() == 100);

  // first entry against an independent bisection on xi(1/2+it) sign changes
  Real lo = Real::of(14.0, wp), hi = Real::of(14.2, wp);
  Real flo = xi_on_critical_line(lo, wp);
  for (int i = 0; i < 120; ++i) {
    Real mid = (lo + hi) * 0.5;
    Real fm = xi_on_critical_line(mid, wp);
    if (fm.sign() == flo.sign()) { lo = mid; flo = fm; } else { hi = mid; }
  }
  Real t1_oracle = (lo + hi) * 0.5;
  CHECK(abs(zl.ordinates[0] - t1_oracle) < Real::of(1e-6, wp));
  CHECK(abs(zl.ordinates[0] - Real::from_string("14.134725141734", wp)) < Real::of(1e-6, wp));

  // L(1/2 + i t_n) small at the first 10 ordinates
  DirichletCharacter chi0(1);
  for (int n = 0; n < 10; ++n) {
    Cplx s(Real::of(0.5, wp), zl.ordinates[n]);
    CHECK(abs(dirichlet_l(s, chi0, wp)) <= Real::of(1e-6, wp));
  }

  // empty file -> empty list
  {
    std::ofstream f("/tmp/selzeta_empty.txt");
    f << "# nothing here\n\n";
  }
  CHECK(load_zero_list("/tmp/selzeta_empty.txt", wp).ordinates.empty());

  // non-monotone -> MonotonicityError with line number
  {
    std::ofstream f("/tmp/selzeta_bad.txt");
    f << "14.1\n13.9\n";
  }
  try {
    load_zero_list("/tmp/selzeta_bad.txt", wp);
    CHECK(false);
  } catch (const MonotonicityError& e) {
    CHECK(e.line == 2);
  }

  // junk -> ParseError
  {
    std::ofstream f("/tmp/selzeta_junk.txt");
    f << "14.1\nnot-a-number\n";
  }
  CHECK_THROWS_AS(load_zero_list("/tmp/selzeta_junk.txt", wp), ParseError);
}
