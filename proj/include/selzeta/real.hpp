#pragma once

// Thin RAII wrapper over mpfr_t. Every Real carries its own precision; binary
// operations produce results at the wider of the two operand precisions, so a
// computation seeded at ctx precision stays there. Rounding is to nearest.

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "selzeta/errors.hpp"

namespace selzeta {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(int x, mpfr_prec_t prec) { return of(static_cast<long>(x), prec); }
  static Real from_string(const char* s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s, 10, MPFR_RNDN) != 0)
      throw DomainError(std::string("unparsable number: ") + s);
    return r;
  }
  // q = p/q as an exact ratio rounded once.
  static Real ratio(long num, long den, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real euler_gamma(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // floor(log2 |x|) + 1 for nonzero finite x; very negative for zero.
  long exp2() const { return is_zero() ? mpfr_get_emin() : mpfr_get_exp(v_); }

  // Fixed-notation decimal string with `digits` significant digits, no
  // locale involvement; used for deterministic report output.
  std::string str(size_t digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define SELZETA_REAL_BINOP(op, fn, fn_si, fn_d)                        \
  friend Real operator op(const Real& a, const Real& b) {              \
    Real r(std::max(a.prec(), b.prec()));                              \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                   \
    return r;                                                          \
  }                                                                    \
  friend Real operator op(const Real& a, long b) {                     \
    Real r(a.prec());                                                  \
    fn_si(r.v_, a.v_, b, MPFR_RNDN);                                   \
    return r;                                                          \
  }                                                                    \
  friend Real operator op(const Real& a, double b) {                   \
    Real r(a.prec());                                                  \
    fn_d(r.v_, a.v_, b, MPFR_RNDN);                                    \
    return r;                                                          \
  }

  SELZETA_REAL_BINOP(+, mpfr_add, mpfr_add_si, mpfr_add_d)
  SELZETA_REAL_BINOP(-, mpfr_sub, mpfr_sub_si, mpfr_sub_d)
  SELZETA_REAL_BINOP(*, mpfr_mul, mpfr_mul_si, mpfr_mul_d)
  SELZETA_REAL_BINOP(/, mpfr_div, mpfr_div_si, mpfr_div_d)
#undef SELZETA_REAL_BINOP

  friend Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
  friend Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
  friend Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
  friend Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
  friend Real operator+(int a, const Real& b) { return b + static_cast<long>(a); }
  friend Real operator*(int a, const Real& b) { return b * static_cast<long>(a); }

  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator+(double a, const Real& b) { return b + a; }
  friend Real operator*(double a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long b) { mpfr_add_si(v_, v_, b, MPFR_RNDN); return *this; }
  Real& operator-=(long b) { mpfr_sub_si(v_, v_, b, MPFR_RNDN); return *this; }
  Real& operator*=(long b) { mpfr_mul_si(v_, v_, b, MPFR_RNDN); return *this; }
  Real& operator/=(long b) { mpfr_div_si(v_, v_, b, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

#define SELZETA_REAL_FN1(name, fn)       \
  friend Real name(const Real& a) {      \
    Real r(a.prec());                    \
    fn(r.v_, a.v_, MPFR_RNDN);           \
    return r;                            \
  }
  SELZETA_REAL_FN1(abs, mpfr_abs)
  SELZETA_REAL_FN1(sqrt, mpfr_sqrt)
  SELZETA_REAL_FN1(exp, mpfr_exp)
  SELZETA_REAL_FN1(log, mpfr_log)
  SELZETA_REAL_FN1(log1p, mpfr_log1p)
  SELZETA_REAL_FN1(sin, mpfr_sin)
  SELZETA_REAL_FN1(cos, mpfr_cos)
  SELZETA_REAL_FN1(tan, mpfr_tan)
  SELZETA_REAL_FN1(sinh, mpfr_sinh)
  SELZETA_REAL_FN1(cosh, mpfr_cosh)
#undef SELZETA_REAL_FN1

  friend Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend Real ceil(const Real& a) {
    Real r(a.prec());
    mpfr_ceil(r.v_, a.v_);
    return r;
  }
  friend Real round_nearest(const Real& a) {
    Real r(a.prec());
    mpfr_round(r.v_, a.v_);
    return r;
  }

  friend Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& x, const Real& y) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& b, const Real& e) {
    Real r(std::max(b.prec(), e.prec()));
    mpfr_pow(r.v_, b.v_, e.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& b, long e) {
    Real r(b.prec());
    mpfr_pow_si(r.v_, b.v_, e, MPFR_RNDN);
    return r;
  }
  // x * 2^e, exact.
  friend Real ldexp2(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
  friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

  // Gamma / digamma / zeta on the real line (MPFR built-ins). Used by
  // test oracles and for real-argument fast paths; the complex-plane
  // versions live in numcore.hpp.
  friend Real real_gamma(const Real& a) {
    Real r(a.prec());
    mpfr_gamma(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real real_lngamma(const Real& a) {
    Real r(a.prec());
    mpfr_lngamma(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real real_digamma(const Real& a) {
    Real r(a.prec());
    mpfr_digamma(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real real_zeta(const Real& a) {
    Real r(a.prec());
    mpfr_zeta(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

}  // namespace selzeta
