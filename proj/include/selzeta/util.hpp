#pragma once

// Seeded sampling and finite-difference helpers shared by the verification
// suites. The sampler is a plain splitmix64 so "random" points are identical
// across platforms and runs for a fixed seed.

#include <cstdint>
#include <cmath>
#include <functional>

#include "selzeta/complex.hpp"

namespace selzeta {

class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  static constexpr std::uint64_t kDefaultSeed = 0x5e1be7au;

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 bits; exactly representable in double.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Complex point in the box, redrawn until `ok` accepts it (e.g. away from
  // poles). `ok` must accept a positive-measure set or this never returns.
  Cplx cplx_in_box(double re_lo, double re_hi, double im_lo, double im_hi,
                   mpfr_prec_t prec,
                   const std::function<bool(double, double)>& ok = nullptr) {
    for (;;) {
      double x = uniform(re_lo, re_hi);
      double y = uniform(im_lo, im_hi);
      if (!ok || ok(x, y)) return Cplx::of(x, y, prec);
    }
  }

 private:
  std::uint64_t state_;
};

inline double dist_to_nearest_int(double x) { return std::fabs(x - std::round(x)); }

// Central finite differences of an analytic map along the real direction.
// Branch-continuous inputs are the caller's responsibility (all log-domain
// functions here are assembled as sums of individually smooth logs).
inline Cplx fd_second(const std::function<Cplx(const Cplx&)>& f, const Cplx& s,
                      const Real& h) {
  Cplx hp(h, Real(h.prec()));
  Cplx num = f(s + hp) - 2L * f(s) + f(s - hp);
  return num / (h * h);
}

inline Cplx fd_first(const std::function<Cplx(const Cplx&)>& f, const Cplx& s,
                     const Real& h) {
  Cplx hp(h, Real(h.prec()));
  return (f(s + hp) - f(s - hp)) / (2L * (h));
}

// Five-point stencils, O(h^4).
inline Cplx fd_first5(const std::function<Cplx(const Cplx&)>& f, const Cplx& s,
                      const Real& h) {
  Cplx hp(h, Real(h.prec()));
  Cplx num = 8L * (f(s + hp) - f(s - hp)) - (f(s + 2L * hp) - f(s - 2L * hp));
  return num / (12L * h);
}

inline Cplx fd_second5(const std::function<Cplx(const Cplx&)>& f, const Cplx& s,
                       const Real& h) {
  Cplx hp(h, Real(h.prec()));
  Cplx num = 16L * (f(s + hp) + f(s - hp)) - (f(s + 2L * hp) + f(s - 2L * hp)) - 30L * f(s);
  return num / (12L * h * h);
}

}  // namespace selzeta
