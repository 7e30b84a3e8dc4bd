#pragma once

// Dirichlet characters with exact arithmetic: a character mod q is an
// exponent vector over fixed generators of (Z/q)^x (CRT over prime powers,
// smallest primitive root per odd prime power, 2-adic part generated by -1
// and 5). Values are exact rational angles, so conductor, parity,
// conjugation and orthogonality are exact. On top of the characters:
// L(s,chi) via Hurwitz zeta (Dirichlet series fast path at large Re s), the
// completed xi(s,chi), Gauss-sum root numbers, and zero-list IO.

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "selzeta/numcore.hpp"
#include "selzeta/rat.hpp"

namespace selzeta {

namespace detail {

struct CyclicComponent {
  long p;         // underlying prime
  long pk;        // prime-power modulus this component lives in
  long generator; // generator residue mod pk
  long order;
};

struct GroupStructure {
  long q = 1;
  std::vector<CyclicComponent> comps;
  // dlogs[i][r] = exponent of comps[i].generator in r (r coprime to pk), else -1
  std::vector<std::vector<long>> dlogs;
  long phi = 1;
};

inline long pow_mod(long base, long e, long m) {
  long long acc = 1, b = base % m;
  if (b < 0) b += m;
  while (e) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<long>(acc);
}

inline long smallest_primitive_root(long p, long pk, long phi_pk) {
  std::vector<long> fac;
  long m = phi_pk;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  for (long g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (long f : fac)
      if (pow_mod(g, phi_pk / f, pk) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw DomainError("no primitive root found");
}

inline std::shared_ptr<const GroupStructure> group_structure(long q) {
  static std::map<long, std::shared_ptr<const GroupStructure>> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  auto gs = std::make_shared<GroupStructure>();
  gs->q = q;
  long m = q;
  long e2 = 0;
  while (m % 2 == 0) { m /= 2; ++e2; }
  if (e2 == 2) {
    gs->comps.push_back({2, 4, 3, 2});
    gs->dlogs.push_back(std::vector<long>(4, -1));
    gs->dlogs.back()[1] = 0;
    gs->dlogs.back()[3] = 1;
  } else if (e2 >= 3) {
    long pk = 1l << e2;
    long half = pk >> 2;  // order of 5 mod 2^e2
    gs->comps.push_back({2, pk, pk - 1, 2});
    gs->comps.push_back({2, pk, 5, half});
    gs->dlogs.push_back(std::vector<long>(pk, -1));
    gs->dlogs.push_back(std::vector<long>(pk, -1));
    long long r = 1;
    for (long k = 0; k < half; ++k) {
      gs->dlogs[0][r] = 0;
      gs->dlogs[1][r] = k;
      long neg = pk - static_cast<long>(r);
      gs->dlogs[0][neg] = 1;
      gs->dlogs[1][neg] = k;
      r = r * 5 % pk;
    }
  }
  long p = 3;
  while (m > 1) {
    if (p * p > m) p = m;  // remainder is prime
    if (m % p == 0) {
      long pk = 1;
      while (m % p == 0) { m /= p; pk *= p; }
      long phi_pk = pk / p * (p - 1);
      long g = smallest_primitive_root(p, pk, phi_pk);
      gs->comps.push_back({p, pk, g, phi_pk});
      gs->dlogs.push_back(std::vector<long>(pk, -1));
      long long r = 1;
      for (long k = 0; k < phi_pk; ++k) {
        gs->dlogs.back()[r] = k;
        r = r * g % pk;
      }
    }
    p += 2;
  }
  gs->phi = 1;
  for (auto& cmp : gs->comps) gs->phi *= cmp.order;
  cache[q] = gs;
  return gs;
}

// x = r1 mod m1, x = r2 mod m2 for coprime m1, m2.
inline long crt_pair(long r1, long m1, long r2, long m2) {
  for (long x = r1 % m1; ; x += m1) {
    if (x % m2 == r2 % m2) return x;
    if (x > m1 * m2) throw DomainError("crt failed");
  }
}

}  // namespace detail

// e^{2 pi i t} for exact rational t.
inline Cplx root_of_unity(const Rat& t, mpfr_prec_t wp) {
  Real ang = 2L * Real::pi(wp) * Real::ratio(t.num, t.den, wp);
  return Cplx(cos(ang), sin(ang));
}

class DirichletCharacter {
 public:
  // principal character mod q
  explicit DirichletCharacter(long q)
      : gs_(detail::group_structure(q)), exps_(gs_->comps.size(), 0), label_(0) {}

  DirichletCharacter(long q, std::vector<long> exps, long label)
      : gs_(detail::group_structure(q)), exps_(std::move(exps)), label_(label) {}

  long modulus() const { return gs_->q; }
  long label() const { return label_; }
  const std::vector<long>& exponents() const { return exps_; }

  bool is_principal() const {
    for (long c : exps_)
      if (c != 0) return false;
    return true;
  }

  // Exact value angle in [0,1), or nullopt when gcd(a, q) > 1.
  std::optional<Rat> value_angle(long a) const {
    long q = gs_->q;
    a %= q;
    if (a < 0) a += q;
    if (q == 1) return Rat(0);
    if (std::gcd(a, q) != 1) return std::nullopt;
    Rat t(0);
    for (size_t i = 0; i < gs_->comps.size(); ++i) {
      const auto& cmp = gs_->comps[i];
      long x = gs_->dlogs[i][a % cmp.pk];
      long c = exps_[i];
      if (c != 0 && x != 0) t += Rat((c % cmp.order) * (x % cmp.order), cmp.order);
    }
    t -= Rat(t.floor_int());
    return t;
  }

  Cplx value(long a, mpfr_prec_t wp) const {
    auto t = value_angle(a);
    if (!t) return Cplx::of(0.0, 0.0, wp);
    return root_of_unity(*t, wp);
  }

  // v with chi(-1) = (-1)^v.
  int parity() const {
    auto t = value_angle(gs_->q - 1);
    return (!t || t->num == 0) ? 0 : 1;  // angle is 0 or 1/2
  }

  DirichletCharacter conjugate() const {
    std::vector<long> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i)
      e[i] = exps_[i] == 0 ? 0 : gs_->comps[i].order - exps_[i];
    return DirichletCharacter(gs_->q, std::move(e), -1);
  }

  // Smallest inducing modulus, computed componentwise: an odd component of
  // character order p^a * b (b coprime to p) needs conductor exponent a+1;
  // the 2-adic needs max(2 for the sign part, e2 - v2(c5) for the 5-part).
  long conductor() const {
    long f = 1;
    size_t i = 0;
    size_t n2 = 0;  // number of 2-adic components
    while (n2 < gs_->comps.size() && gs_->comps[n2].p == 2) ++n2;
    if (n2 == 1) {  // q has 4 || q exactly
      if (exps_[0] != 0) f *= 4;
      i = 1;
    } else if (n2 == 2) {
      long e_minus = exps_[0] != 0 ? 2 : 0;
      long e_five = 0;
      if (exps_[1] != 0) {
        long c = exps_[1];
        long v2 = 0;
        while (c % 2 == 0) { c /= 2; ++v2; }
        long e0 = 0;
        for (long pk = gs_->comps[0].pk; pk > 1; pk /= 2) ++e0;
        e_five = e0 - v2;
      }
      long ee = std::max(e_minus, e_five);
      f <<= ee;
      i = 2;
    }
    for (; i < gs_->comps.size(); ++i) {
      long c = exps_[i];
      if (c == 0) continue;
      const auto& cmp = gs_->comps[i];
      long ord_char = cmp.order / std::gcd(c, cmp.order);
      long vp = 0;
      while (ord_char % cmp.p == 0) { ord_char /= cmp.p; ++vp; }
      for (long k = 0; k <= vp; ++k) f *= cmp.p;
    }
    return f;
  }

  bool is_primitive() const { return conductor() == gs_->q; }

  const detail::GroupStructure& group() const { return *gs_; }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exps_ == b.exps_;
  }

 private:
  std::shared_ptr<const detail::GroupStructure> gs_;
  std::vector<long> exps_;
  long label_;
};

inline long euler_phi(long q) { return detail::group_structure(q)->phi; }

// All phi(q) characters mod q in canonical order: mixed-radix counter over
// the fixed generator components, first component slowest.
inline std::vector<DirichletCharacter> enumerate_characters(long q) {
  if (q < 1) throw DomainError("enumerate_characters: q must be >= 1");
  auto gs = detail::group_structure(q);
  size_t n = gs->comps.size();
  std::vector<DirichletCharacter> out;
  std::vector<long> exps(n, 0);
  long label = 0;
  for (;;) {
    out.push_back(DirichletCharacter(q, exps, label++));
    if (n == 0) return out;
    size_t i = n;
    for (;;) {
      --i;
      if (++exps[i] < gs->comps[i].order) break;
      exps[i] = 0;
      if (i == 0) return out;
    }
  }
}

inline std::vector<DirichletCharacter> primitive_characters(long q) {
  std::vector<DirichletCharacter> out;
  for (auto& c : enumerate_characters(q))
    if (c.conductor() == q) out.push_back(c);
  return out;
}

// Character mod M defined by a value-angle function on residues coprime to M.
// The angle function is evaluated on CRT lifts of the fixed generators.
inline DirichletCharacter character_from_angles(
    long M, const std::function<Rat(long)>& angle_of) {
  auto gs = detail::group_structure(M);
  std::vector<long> exps(gs->comps.size(), 0);
  for (size_t i = 0; i < gs->comps.size(); ++i) {
    const auto& cmp = gs->comps[i];
    // cmp.pk is the full p-part of M, so the complement is coprime to it
    long other = M / cmp.pk;
    long lifted = other == 1 ? cmp.generator
                             : detail::crt_pair(cmp.generator, cmp.pk, 1, other);
    Rat t = angle_of(lifted);
    Rat c = t * Rat(cmp.order);
    if (!c.is_integer()) throw DomainError("character_from_angles: not a character");
    long ce = c.num % cmp.order;
    if (ce < 0) ce += cmp.order;
    exps[i] = ce;
  }
  return DirichletCharacter(M, std::move(exps), -1);
}

// chi(n) = chi1(n) chi2(n) omega_{m1 m2}(n), a character mod lcm(q1,q2,m1*m2).
inline DirichletCharacter combine(const DirichletCharacter& chi1,
                                  const DirichletCharacter& chi2, long m1, long m2) {
  if (m1 < 1 || m2 < 1) throw DomainError("combine: moduli must be positive");
  long M = std::lcm(std::lcm(chi1.modulus(), chi2.modulus()), m1 * m2);
  return character_from_angles(M, [&](long a) {
    auto t1 = chi1.value_angle(a);
    auto t2 = chi2.value_angle(a);
    if (!t1 || !t2) throw DomainError("combine: generator not coprime");
    Rat t = *t1 + *t2;
    return t - Rat(t.floor_int());
  });
}

// The primitive character inducing chi (modulus = conductor of chi).
inline DirichletCharacter primitive_part(const DirichletCharacter& chi) {
  long f = chi.conductor();
  long q = chi.modulus();
  if (f == q) return chi;
  return character_from_angles(f, [&](long a) {
    for (long t = 0; t <= q + 1; ++t) {
      long cand = a + f * t;
      long r = cand % q;
      if (r == 0) r = q;
      if (std::gcd(r, q) == 1) {
        auto v = chi.value_angle(cand);
        if (!v) throw DomainError("primitive_part: unexpected vanishing");
        return *v;
      }
    }
    throw DomainError("primitive_part: lift failed");
  });
}

// ---------------------------------------------------------------------------
// L-functions.
// ---------------------------------------------------------------------------

// L(s, chi). Hurwitz-zeta route at moderate Re s; plain Dirichlet series once
// Re s is large enough that the tail bound N^{1-sigma}/(sigma-1) reaches
// 2^-(wp+8) with a short sum.
inline Cplx dirichlet_l(const Cplx& s, const DirichletCharacter& chi, mpfr_prec_t wp) {
  long q = chi.modulus();
  if (chi.is_principal() && abs(s - 1L) < Real::pow2(-(wp / 2), wp)) throw PoleAtOne();
  double sigma = s.re.to_double();
  double thresh = std::max(24.0, static_cast<double>(wp) / 8.0);
  if (sigma >= thresh) {
    double lnN = (static_cast<double>(wp + 8) * 0.6931472 - std::log(sigma - 1.0)) /
                 (sigma - 1.0);
    long N = static_cast<long>(std::ceil(std::exp(std::max(0.0, lnN)))) + 2;
    Cplx acc = Cplx::of(1.0, 0.0, wp);  // n = 1
    Cplx ms = -1L * s;
    for (long n = 2; n <= N; ++n) {
      auto t = chi.value_angle(n);
      if (!t) continue;
      acc += root_of_unity(*t, wp) * exp(ms * log(Cplx::of(Real::of(n, wp))));
    }
    return acc;
  }
  bool principal = chi.is_principal();
  Cplx acc(wp);
  for (long a = 1; a <= q; ++a) {
    auto t = chi.value_angle(a);
    if (!t) continue;
    // for nonprincipal chi the 1/(s-1) poles cancel across the character
    // sum, so the pole-subtracted Hurwitz values give L everywhere
    Cplx hz = principal ? hurwitz_zeta_cx(s, Cplx::of(Real::ratio(a, q, wp)), wp)
                        : hurwitz_zeta_reg(s, Cplx::of(Real::ratio(a, q, wp)), wp);
    acc += root_of_unity(*t, wp) * hz;
  }
  return exp(-1L * s * log(Cplx::of(Real::of(q, wp)))) * acc;
}

// Gauss sum tau(chi) = sum_a chi(a) e^{2 pi i a / q}.
inline Cplx gauss_sum(const DirichletCharacter& chi, mpfr_prec_t wp) {
  long q = chi.modulus();
  Cplx acc(wp);
  for (long a = 1; a <= q; ++a) {
    auto t = chi.value_angle(a);
    if (!t) continue;
    acc += root_of_unity(*t, wp) * root_of_unity(Rat(a, q), wp);
  }
  return acc;
}

// epsilon(chi) = tau(chi) / (i^v sqrt(q)); |epsilon| = 1 for primitive chi.
inline Cplx root_number(const DirichletCharacter& chi, mpfr_prec_t wp) {
  if (chi.modulus() == 1) return Cplx::of(1.0, 0.0, wp);
  if (!chi.is_primitive()) throw NotPrimitiveError();
  Cplx tau = gauss_sum(chi, wp);
  Cplx iv = chi.parity() == 0 ? Cplx::of(1.0, 0.0, wp) : Cplx::of(0.0, 1.0, wp);
  return tau / (iv * Cplx::of(sqrt(Real::of(chi.modulus(), wp))));
}

// Complete L-function xi(s,chi) = {s(s-1)}^{delta} (pi/q)^{-s/2}
// Gamma((s+v)/2) L(s,chi), delta = 1 iff chi is the trivial character mod 1.
// Entire in s; the delta = 1 pole/zero cancellations at s = 0, 1 are taken
// analytically (s Gamma(s/2) = 2 Gamma(s/2+1), limits at the fixed points).
inline Cplx xi_complete(const Cplx& s, const DirichletCharacter& chi, mpfr_prec_t wp) {
  long q = chi.modulus();
  int v = chi.parity();
  Real pi = Real::pi(wp);
  Cplx pref = exp(Real::of(-0.5, wp) * s * log(Cplx::of(pi / Real::of(q, wp))));
  if (q != 1) {
    return pref * exp(log_gamma((s + Real::of(v, wp)) / 2L, wp)) *
           dirichlet_l(s, chi, wp);
  }
  if (abs(s - 1L) < Real::pow2(-(wp / 2), wp)) return Cplx::of(1.0, 0.0, wp);
  if (abs(s) < Real::pow2(-(wp / 2), wp)) return Cplx::of(1.0, 0.0, wp);
  Cplx g = 2L * (s - 1L) * exp(log_gamma(s / 2L + 1L, wp));
  return pref * g * riemann_zeta(s, wp);
}

// ---------------------------------------------------------------------------
// Zero lists.
// ---------------------------------------------------------------------------

struct ZeroList {
  std::vector<Real> ordinates;  // ascending positive t_n, rho_n = 1/2 + i t_n
  std::string source;
};

// One decimal ordinate per line; '#' comments and blank lines allowed.
inline ZeroList load_zero_list(const std::string& path, mpfr_prec_t wp) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero list: " + path, 0);
  ZeroList zl;
  zl.source = path;
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
    Real t(wp);
    try {
      t = Real::from_string(tok.c_str(), wp);
    } catch (const DomainError&) {
      throw ParseError("unparsable ordinate '" + tok + "'", line_no);
    }
    if (!(t > 0.0)) throw MonotonicityError("ordinates must be positive", line_no);
    if (!zl.ordinates.empty() && !(zl.ordinates.back() < t))
      throw MonotonicityError("ordinates must be strictly increasing", line_no);
    zl.ordinates.push_back(t);
  }
  return zl;
}

}  // namespace selzeta
