#pragma once

// Working-precision policy. Everything downstream derives its truncation
// orders from prec_bits so results are reproducible for a fixed context.

#include <cmath>

#include "selzeta/errors.hpp"
#include "selzeta/real.hpp"

namespace selzeta {

struct PrecisionContext {
  long prec_bits = 192;    // target binary precision of public results
  long tol_closed_shift = 40;  // tol_closed = 2^-(prec_bits - tol_closed_shift)
  double tol_quad = 1e-10;     // quadrature-based checks
  double tol_trunc = 1e-3;     // zero-list-truncated checks
  long guard_bits = 64;        // internal headroom

  explicit PrecisionContext(long bits = 192) : prec_bits(bits) { validate(); }

  void validate() const {
    if (prec_bits < 64) throw DomainError("prec_bits must be >= 64");
    if (!(tol_quad < tol_trunc)) throw DomainError("tolerances out of order");
    // tol_closed = 2^-(prec-40) must sit below tol_quad
    double tc_log10 = -static_cast<double>(prec_bits - tol_closed_shift) * 0.30103;
    if (!(tc_log10 < std::log10(tol_quad)))
      throw DomainError("tol_closed not below tol_quad at this precision");
  }

  // Precision all internal Real/Cplx values carry.
  mpfr_prec_t wprec() const { return static_cast<mpfr_prec_t>(prec_bits + guard_bits); }

  Real tol_closed() const { return Real::pow2(-(prec_bits - tol_closed_shift), wprec()); }
  Real tol_quad_r() const { return Real::of(tol_quad, wprec()); }
  Real tol_trunc_r() const { return Real::of(tol_trunc, wprec()); }

  Cplx cplx(double re, double im = 0.0) const { return Cplx::of(re, im, wprec()); }
  Real real(double x) const { return Real::of(x, wprec()); }
  Real real(long x) const { return Real::of(x, wprec()); }
};

}  // namespace selzeta
