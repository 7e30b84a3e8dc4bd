#pragma once

// Complex numbers over Real. log/pow/sqrt use the principal branch; the
// exp(sum-of-logs) evaluation style used throughout keeps identity checks
// insensitive to branch offsets.

#include <string>
#include <utility>

#include "selzeta/real.hpp"

namespace selzeta {

class Cplx {
 public:
  Real re, im;

  explicit Cplx(mpfr_prec_t prec) : re(prec), im(prec) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(Real r) : re(std::move(r)), im(re.prec()) {}

  static Cplx of(double r, double i, mpfr_prec_t prec) {
    return Cplx(Real::of(r, prec), Real::of(i, prec));
  }
  static Cplx of(const Real& r) { return Cplx(r, Real(r.prec())); }

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_real() const { return im.is_zero(); }

  friend Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
  friend Cplx operator+(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return Cplx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }

  friend Cplx operator+(const Cplx& a, const Real& b) { return Cplx(a.re + b, a.im); }
  friend Cplx operator-(const Cplx& a, const Real& b) { return Cplx(a.re - b, a.im); }
  friend Cplx operator*(const Cplx& a, const Real& b) { return Cplx(a.re * b, a.im * b); }
  friend Cplx operator/(const Cplx& a, const Real& b) { return Cplx(a.re / b, a.im / b); }
  friend Cplx operator+(const Real& a, const Cplx& b) { return b + a; }
  friend Cplx operator*(const Real& a, const Cplx& b) { return b * a; }
  friend Cplx operator-(const Real& a, const Cplx& b) { return Cplx(a - b.re, -b.im); }
  friend Cplx operator/(const Real& a, const Cplx& b) { return Cplx::of(a) / b; }

  friend Cplx operator+(const Cplx& a, long b) { return Cplx(a.re + b, a.im); }
  friend Cplx operator-(const Cplx& a, long b) { return Cplx(a.re - b, a.im); }
  friend Cplx operator*(const Cplx& a, long b) { return Cplx(a.re * b, a.im * b); }
  friend Cplx operator/(const Cplx& a, long b) { return Cplx(a.re / b, a.im / b); }
  friend Cplx operator+(long a, const Cplx& b) { return b + a; }
  friend Cplx operator-(long a, const Cplx& b) { return Cplx(a - b.re, -b.im); }
  friend Cplx operator*(long a, const Cplx& b) { return b * a; }
  friend Cplx operator/(long a, const Cplx& b) {
    return Cplx(Real::of(a, b.prec()), Real(b.prec())) / b;
  }

  friend Cplx operator+(const Cplx& a, double b) { return Cplx(a.re + b, a.im); }
  friend Cplx operator-(const Cplx& a, double b) { return Cplx(a.re - b, a.im); }
  friend Cplx operator*(const Cplx& a, double b) { return Cplx(a.re * b, a.im * b); }
  friend Cplx operator/(const Cplx& a, double b) { return Cplx(a.re / b, a.im / b); }
  friend Cplx operator+(double a, const Cplx& b) { return b + a; }
  friend Cplx operator-(double a, const Cplx& b) { return Cplx(a - b.re, -b.im); }
  friend Cplx operator*(double a, const Cplx& b) { return b * a; }

  friend Cplx operator+(const Cplx& a, int b) { return a + static_cast<long>(b); }
  friend Cplx operator-(const Cplx& a, int b) { return a - static_cast<long>(b); }
  friend Cplx operator*(const Cplx& a, int b) { return a * static_cast<long>(b); }
  friend Cplx operator/(const Cplx& a, int b) { return a / static_cast<long>(b); }
  friend Cplx operator+(int a, const Cplx& b) { return static_cast<long>(a) + b; }
  friend Cplx operator-(int a, const Cplx& b) { return static_cast<long>(a) - b; }
  friend Cplx operator*(int a, const Cplx& b) { return static_cast<long>(a) * b; }

  Cplx& operator+=(const Cplx& b) { re += b.re; im += b.im; return *this; }
  Cplx& operator-=(const Cplx& b) { re -= b.re; im -= b.im; return *this; }
  Cplx& operator*=(const Cplx& b) { *this = *this * b; return *this; }
  Cplx& operator+=(long b) { re += b; return *this; }
  Cplx& operator-=(long b) { re -= b; return *this; }
  Cplx& operator+=(const Real& b) { re += b; return *this; }
  Cplx& operator-=(const Real& b) { re -= b; return *this; }

  friend Cplx conj(const Cplx& a) { return Cplx(a.re, -a.im); }
  friend Real abs(const Cplx& a) { return hypot(a.re, a.im); }
  friend Real norm2(const Cplx& a) { return a.re * a.re + a.im * a.im; }
  friend Real arg(const Cplx& a) { return atan2(a.im, a.re); }

  friend Cplx exp(const Cplx& a) {
    Real m = exp(a.re);
    return Cplx(m * cos(a.im), m * sin(a.im));
  }
  // Principal branch, Im in (-pi, pi].
  friend Cplx log(const Cplx& a) { return Cplx(log(abs(a)), arg(a)); }
  friend Cplx sqrt(const Cplx& a) { return exp(log(a) / 2L); }
  friend Cplx pow(const Cplx& b, const Cplx& e) { return exp(e * log(b)); }
  friend Cplx pow(const Cplx& b, const Real& e) { return exp(Cplx(e * log(abs(b)), e * arg(b))); }
  friend Cplx pow(const Cplx& b, long e);  // small integer powers, below

  friend Cplx sin(const Cplx& a) {
    return Cplx(sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im));
  }
  friend Cplx cos(const Cplx& a) {
    return Cplx(cos(a.re) * cosh(a.im), -sin(a.re) * sinh(a.im));
  }
  friend Cplx sinh(const Cplx& a) {
    return Cplx(sinh(a.re) * cos(a.im), cosh(a.re) * sin(a.im));
  }
  friend Cplx cosh(const Cplx& a) {
    return Cplx(cosh(a.re) * cos(a.im), sinh(a.re) * sin(a.im));
  }

  std::string str(size_t digits) const {
    if (im.is_zero()) return re.str(digits);
    std::string s = re.str(digits);
    if (im.sign() >= 0)
      s += " + " + im.str(digits) + "i";
    else
      s += " - " + (-im).str(digits) + "i";
    return s;
  }
};

inline Cplx pow(const Cplx& b, long e) {
  mpfr_prec_t p = b.prec();
  Cplx acc = Cplx::of(1.0, 0.0, p);
  Cplx base = b;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return inv ? 1L / acc : acc;
}

// |a - b| as a Real (absolute residual).
inline Real dist(const Cplx& a, const Cplx& b) { return abs(a - b); }

// |a - b| / max(|a|, tiny): relative residual against a.
inline Real rel_dist(const Cplx& a, const Cplx& b) {
  Real d = abs(a - b);
  Real m = abs(a);
  if (m.is_zero()) return d;
  return d / m;
}

}  // namespace selzeta
