#pragma once

// 256-bit reference values.  Formulas are written out independently of the
// library: monomials in m grouped by power instead of by constant.

#include <mpfr.h>

#include <array>
#include <cstdint>

#include "sausage4/interval.hpp"

namespace reference {

constexpr mpfr_prec_t kBits = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
  Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }  // NOLINT(google-explicit-constructor)
  Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real sqrt_of(long n) {
    Real r(n);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  static Real acos_third() {
    Real r(1);
    mpfr_div_ui(r.v_, r.v_, 3, MPFR_RNDN);
    mpfr_acos(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  static Real atan_silver() {
    Real r = Real(3) - Real(2) * sqrt_of(2);
    mpfr_atan(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return apply(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return apply(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return apply(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return apply(mpfr_div, a, b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

 private:
  template <typename Op>
  static Real apply(Op op, const Real& a, const Real& b) {
    Real r;
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

inline bool contains(const sausage4::Interval& x, const Real& v) {
  return mpfr_cmp_d(v.get(), x.lo()) >= 0 && mpfr_cmp_d(v.get(), x.hi()) <= 0;
}

inline Real kappa3() { return Real(4) * Real::pi() / Real(3); }
inline Real kappa4() { return Real::pi() * Real::pi() / Real(2); }

/// vol(t_h(Y_m) + B^4), coefficients of m^4 .. m^0.
inline Real steiner(long m, const std::array<long, 3>& h) {
  long s[5] = {3, 0, 0, 0, 0};
  for (long v : h) {
    s[1] += v;
    s[2] += v * v;
    s[3] += v * v * v;
    s[4] += v * v * v * v;
  }
  const Real r2 = Real::sqrt_of(2), r3 = Real::sqrt_of(3), pi = Real::pi();
  const Real a = Real::acos_third(), t = Real::atan_silver();
  const Real M(m);
  const Real c4 = Real(32);
  const Real c3 = Real(64) * r2 - Real(16 * s[1]) / Real(3);
  const Real c2 = Real(16) * r3 * pi - Real(8 * s[1]) * r2 - Real(8 * s[2]);
  const Real c1 = Real(64) * (Real(3) * a - pi) - Real(4 * s[1]) * r3 * pi / Real(3) - Real(8 * s[2]) * r2 -
                  Real(16 * s[3]) / Real(3);
  const Real c0 = pi * pi / Real(2) + (Real(64) * t - Real(24) * (Real(3) * a - pi)) * Real(s[1]) +
                  (Real(18) - Real(14) * r3) * pi / Real(3) * Real(s[2]) - Real(8 * s[3]) * r2 / Real(3) +
                  Real(8 * s[4]) / Real(3);
  return (((c4 * M + c3) * M + c2) * M + c1) * M + c0;
}

struct Components {
  Real vol4, facet, face, edge;
};

/// Single truncated facet, written from the component formulas.
inline Components components(long m, long h) {
  const Real r2 = Real::sqrt_of(2), r3 = Real::sqrt_of(3), pi = Real::pi();
  const Real a = Real::acos_third(), t = Real::atan_silver();
  const Real M(m), H(h), MH(m + h);
  Components c;
  const Real mh4 = MH * MH * MH * MH, m4 = M * M * M * M, h4 = H * H * H * H;
  c.vol4 = Real(32) * m4 - Real(4) * (mh4 - m4 - Real(3) * h4) / Real(3);
  c.facet = Real(8) * r2 / Real(3) * (Real(25) * M * M * M - MH * MH * MH);
  c.face = Real(2) * r3 * pi / Real(3) *
           (Real(24) * M * M - Real(2) * M * H + (Real(3) * r3 - Real(7)) * H * H);
  c.edge = (Real(64) * M - Real(24) * H) * (Real(3) * a - pi) + Real(64) * H * t;
  return c;
}

inline Real sausage_density(long n) {
  return Real(n) * kappa4() / (kappa4() + Real(2 * (n - 1)) * kappa3());
}

}  // namespace reference
