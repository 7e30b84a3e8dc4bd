#pragma once

// Scattering data of the congruence subgroups Gamma0(N), Gamma1(N),
// Gamma(N): enumeration of the character sextuples
// (chi1, chi2, q1, q2, m1, m2) behind the scattering determinant, the
// constant A, cusp/torsion/volume invariants, and the determinant
//
//   phi(s) = (-1)^{(kappa-kappa0)/2} (Gamma(1-s)/Gamma(s))^kappa
//            (A / pi^kappa)^{1-2s} prod_chi L(2-2s, conj chi) / L(2s, chi).
//
// Pair conditions per family (chi_i primitive mod q_i):
//   Gamma0(N): chi1 = chi2, q1 = q2, m1 = 1, q1 | m2, m2 q2 | N
//   Gamma1(N): m1 = 1, q1 | m2, m2 q2 | N
//   Gamma(N) : m1 q1 | N, m2 q2 | N, gcd(m1, m2) = 1
// plus chi1(-1) chi2(-1) = 1 in all cases (the pair count then matches the
// classical cusp number for every family and level).

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "selzeta/dirichlet.hpp"

namespace selzeta {

enum class GroupFamily { Gamma0, Gamma1, GammaFull };

inline const char* family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::Gamma0: return "Gamma0";
    case GroupFamily::Gamma1: return "Gamma1";
    case GroupFamily::GammaFull: return "Gamma";
  }
  return "?";
}

struct ScatteringPair {
  DirichletCharacter chi1, chi2;
  long q1, q2, m1, m2;
  DirichletCharacter combined;  // chi1 chi2 omega_{m1 m2}
};

struct GroupData {
  GroupFamily family = GroupFamily::Gamma0;
  long level = 1;
  long psl_index = 1;          // index of the image in PSL(2,Z)
  Real volume;                 // (pi/3) * psl_index
  long nu2 = 0, nu3 = 0;       // elliptic class counts of order 2, 3
  long kappa = 0;              // number of cusps
  std::optional<long> kappa0;  // -tr phi(1/2); bundled only for Gamma0(1)
  mpz_class a_exact;           // the constant A (an integer for these families)
  Real a_const;
  long genus = 0;
  std::vector<ScatteringPair> pairs;

  explicit GroupData(mpfr_prec_t wp) : volume(wp), a_const(wp) {}

  long kappa0_or_throw() const {
    if (!kappa0) throw MissingKappa0();
    return *kappa0;
  }
};

namespace detail {

inline std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace detail

// Classical cusp-number formulas (the enumeration oracle). Small-N
// exceptions are encoded explicitly.
inline long cusp_count(GroupFamily family, long N) {
  switch (family) {
    case GroupFamily::Gamma0: {
      long k = 0;
      for (long d : detail::divisors(N)) k += euler_phi(std::gcd(d, N / d));
      return k;
    }
    case GroupFamily::Gamma1: {
      if (N == 1) return 1;
      if (N == 2) return 2;
      if (N == 3) return 2;
      if (N == 4) return 3;
      long k = 0;
      for (long d : detail::divisors(N)) k += euler_phi(d) * euler_phi(N / d);
      return k / 2;
    }
    case GroupFamily::GammaFull: {
      if (N == 1) return 1;
      if (N == 2) return 3;
      long k = N * N;
      for (long p : detail::prime_divisors(N)) k = k / (p * p) * (p * p - 1);
      return k / 2;
    }
  }
  return 0;
}

// All sextuples of the family at level N, with combined characters, in a
// canonical order (sorted by m2, q2, m1, q1, label1, label2).
inline std::vector<ScatteringPair> enumerate_pairs(GroupFamily family, long N) {
  if (N < 1) throw DomainError("enumerate_pairs: N must be >= 1");
  std::vector<ScatteringPair> out;
  auto push = [&](const DirichletCharacter& c1, const DirichletCharacter& c2,
                  long q1, long q2, long m1, long m2) {
    if ((c1.parity() + c2.parity()) % 2 != 0) return;  // combined chi even
    DirichletCharacter comb = combine(c1, c2, m1, m2);
    if ((N * N) % comb.modulus() != 0)
      throw DomainError("enumerate_pairs: combined modulus does not divide N^2");
    out.push_back(ScatteringPair{c1, c2, q1, q2, m1, m2, comb});
  };
  auto divs = detail::divisors(N);
  if (family == GroupFamily::Gamma0) {
    for (long m2 : divs) {
      for (long q : detail::divisors(m2)) {
        if (N % (m2 * q) != 0) continue;
        for (auto& chi : primitive_characters(q)) push(chi, chi, q, q, 1, m2);
      }
    }
  } else if (family == GroupFamily::Gamma1) {
    for (long m2 : divs) {
      for (long q1 : detail::divisors(m2)) {
        auto prim1 = primitive_characters(q1);
        if (prim1.empty()) continue;
        for (long q2 : divs) {
          if (N % (m2 * q2) != 0) continue;
          for (auto& c1 : prim1)
            for (auto& c2 : primitive_characters(q2)) push(c1, c2, q1, q2, 1, m2);
        }
      }
    }
  } else {
    for (long m1 : divs) {
      for (long q1 : divs) {
        if (N % (m1 * q1) != 0) continue;
        auto prim1 = primitive_characters(q1);
        if (prim1.empty()) continue;
        for (long m2 : divs) {
          if (std::gcd(m1, m2) != 1) continue;
          for (long q2 : divs) {
            if (N % (m2 * q2) != 0) continue;
            for (auto& c1 : prim1)
              for (auto& c2 : primitive_characters(q2)) push(c1, c2, q1, q2, m1, m2);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ScatteringPair& a, const ScatteringPair& b) {
    auto key = [](const ScatteringPair& p) {
      return std::tuple(p.m2, p.q2, p.m1, p.q1, p.chi1.label(), p.chi2.label());
    };
    return key(a) < key(b);
  });
  return out;
}

// The positive constant A: prod q1 N / gcd(m1, N/m1) on Gamma0, prod q1 N on
// Gamma1, prod m1 m2 q1 N on Gamma(N). Integer-valued for all three.
inline mpz_class compute_A(GroupFamily family, long N,
                           const std::vector<ScatteringPair>& pairs) {
  mpz_class a(1);
  for (const auto& p : pairs) {
    switch (family) {
      case GroupFamily::Gamma0:
        a *= mpz_class(p.q1) * N / std::gcd(p.m1, N / p.m1);
        break;
      case GroupFamily::Gamma1:
        a *= mpz_class(p.q1) * N;
        break;
      case GroupFamily::GammaFull:
        a *= mpz_class(p.m1) * p.m2 * p.q1 * N;
        break;
    }
  }
  return a;
}

// Fully populated group record. kappa0 comes from the bundled table
// ({Gamma0(1): 1}) or the explicit override; absent otherwise.
inline GroupData group_data(GroupFamily family, long N,
                            std::optional<long> kappa0_override,
                            const PrecisionContext& ctx) {
  if (N < 1) throw DomainError("group_data: N must be >= 1");
  mpfr_prec_t wp = ctx.wprec();
  GroupData g(wp);
  g.family = family;
  g.level = N;
  g.pairs = enumerate_pairs(family, N);
  g.kappa = static_cast<long>(g.pairs.size());
  if (g.kappa != cusp_count(family, N))
    throw DomainError("group_data: pair count disagrees with the cusp oracle");

  auto ps = detail::prime_divisors(N);
  switch (family) {
    case GroupFamily::Gamma0: {
      long idx = N;
      for (long p : ps) idx = idx / p * (p + 1);
      g.psl_index = idx;
      g.nu2 = (N % 4 == 0) ? 0 : 1;
      if (g.nu2) {
        for (long p : ps) {
          if (p == 2) continue;
          g.nu2 *= (p % 4 == 1) ? 2 : 0;
        }
      }
      g.nu3 = (N % 9 == 0) ? 0 : 1;
      if (g.nu3) {
        for (long p : ps) {
          if (p == 3) continue;
          g.nu3 *= (p % 3 == 1) ? 2 : 0;
        }
      }
      break;
    }
    case GroupFamily::Gamma1: {
      if (N == 1) {
        g.psl_index = 1;
        g.nu2 = g.nu3 = 1;
      } else if (N == 2) {
        g.psl_index = 3;
        g.nu2 = 1;
        g.nu3 = 0;
      } else {
        long idx = N * N;
        for (long p : ps) idx = idx / (p * p) * (p * p - 1);
        g.psl_index = idx / 2;
        g.nu2 = 0;
        g.nu3 = (N == 3) ? 1 : 0;
      }
      break;
    }
    case GroupFamily::GammaFull: {
      if (N == 1) {
        g.psl_index = 1;
        g.nu2 = g.nu3 = 1;
      } else if (N == 2) {
        g.psl_index = 6;
        g.nu2 = g.nu3 = 0;
      } else {
        long idx = N * N * N;
        for (long p : ps) idx = idx / (p * p) * (p * p - 1);
        g.psl_index = idx / 2;
        g.nu2 = g.nu3 = 0;
      }
      break;
    }
  }
  g.volume = Real::pi(wp) / 3L * g.psl_index;

  // genus from the standard formula; must come out a nonnegative integer
  Rat gen = Rat(1) + Rat(g.psl_index, 12) - Rat(g.nu2, 4) - Rat(g.nu3, 3) -
            Rat(g.kappa, 2);
  if (!gen.is_integer() || gen.num < 0)
    throw DomainError("group_data: genus formula gave a non-integer");
  g.genus = gen.num;

  g.a_exact = compute_A(family, N, g.pairs);
  Real a(wp);
  mpfr_set_z(a.raw(), g.a_exact.get_mpz_t(), MPFR_RNDN);
  g.a_const = a;

  if (kappa0_override) {
    g.kappa0 = *kappa0_override;
  } else if (family == GroupFamily::Gamma0 && N == 1) {
    g.kappa0 = 1;  // bundled table
  }
  if (g.kappa0 && (g.kappa - *g.kappa0) % 2 != 0)
    throw DomainError("group_data: kappa - kappa0 must be even");
  return g;
}

// det phi(s). Throws MissingKappa0 when the sign exponent is unknown.
inline Cplx scattering_det(const Cplx& s, const GroupData& data,
                           const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.wprec();
  long k0 = data.kappa0_or_throw();
  long sign_exp = (data.kappa - k0) / 2;
  Cplx lg = static_cast<long>(data.kappa) * (log_gamma(1L - s, wp) - log_gamma(s, wp));
  Real log_a = log(data.a_const);
  Real log_pi = log(Real::pi(wp));
  Cplx expo = lg + (1L - 2L * s) * (log_a - data.kappa * log_pi);
  Cplx val = exp(expo);
  if (sign_exp % 2 != 0) val = -val;
  for (const auto& p : data.pairs) {
    Cplx num = dirichlet_l(2L - 2L * s, p.combined.conjugate(), wp);
    Cplx den = dirichlet_l(2L * s, p.combined, wp);
    val = val * num / den;
  }
  if (!val.is_finite()) throw PoleError("scattering_det: pole of the displayed formula");
  return val;
}

}  // namespace selzeta
