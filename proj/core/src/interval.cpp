#include "sausage4/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sausage4/errors.hpp"

namespace sausage4 {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();
// Below this magnitude an FMA residual may itself be rounded, so the
// endpoint is widened unconditionally.
constexpr double kTiny = 0x1p-960;

std::atomic<double> g_stress{0.0};

double next_down(double v) { return std::nextafter(v, -kInf); }
double next_up(double v) { return std::nextafter(v, kInf); }

// Overflowed or undefined results.  Operands with infinite endpoints keep
// their infinities; a finite overflow is clamped on the safe side.
double escape_down(double r, double a, double b) {
  if (std::isnan(r)) return -kInf;
  if (r > 0) return (std::isinf(a) || std::isinf(b)) ? r : kMax;
  return r;
}

double escape_up(double r, double a, double b) {
  if (std::isnan(r)) return kInf;
  if (r < 0) return (std::isinf(a) || std::isinf(b)) ? r : -kMax;
  return r;
}

bool tiny(double r) { return std::fabs(r) < kTiny; }

double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return escape_down(s, a, b);
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err < 0 ? next_down(s) : s;
}

double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return escape_up(s, a, b);
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return err > 0 ? next_up(s) : s;
}

double mul_down(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) return escape_down(p, a, b);
  if (std::isinf(a) || std::isinf(b)) return p;
  if (tiny(p)) return next_down(p);
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) return escape_up(p, a, b);
  if (std::isinf(a) || std::isinf(b)) return p;
  if (tiny(p)) return next_up(p);
  return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

// Sign of a/b - q, from the exact remainder a - q*b.
int div_residual_sign(double a, double b, double q) {
  const double r = std::fma(-q, b, a);
  if (r == 0) return 0;
  return ((r > 0) == (b > 0)) ? 1 : -1;
}

double div_down(double a, double b) {
  if (a == 0) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) return escape_down(q, a, b);
  if (std::isinf(a) || std::isinf(b)) return q == 0 ? next_down(q) : q;
  if (tiny(q) || tiny(a)) return next_down(q);
  return div_residual_sign(a, b, q) < 0 ? next_down(q) : q;
}

double div_up(double a, double b) {
  if (a == 0) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) return escape_up(q, a, b);
  if (std::isinf(a) || std::isinf(b)) return q == 0 ? next_up(q) : q;
  if (tiny(q) || tiny(a)) return next_up(q);
  return div_residual_sign(a, b, q) > 0 ? next_up(q) : q;
}

double sqrt_down(double a) {
  if (a == 0) return 0.0;
  const double s = std::sqrt(a);
  if (std::isinf(s)) return s;
  if (tiny(a)) return next_down(s);
  return std::fma(-s, s, a) < 0 ? next_down(s) : s;
}

double sqrt_up(double a) {
  if (a == 0) return 0.0;
  const double s = std::sqrt(a);
  if (std::isinf(s)) return s;
  if (tiny(a)) return next_up(s);
  return std::fma(-s, s, a) > 0 ? next_up(s) : s;
}

// Applies the stress factor to a freshly computed enclosure.
Interval finish(double lo, double hi) {
  const double f = g_stress.load(std::memory_order_relaxed);
  if (f > 0) {
    const double k = f * 0x1p-52;
    if (std::isfinite(lo)) lo = next_down(lo - std::fabs(lo) * k);
    if (std::isfinite(hi)) hi = next_up(hi + std::fabs(hi) * k);
  }
  return Interval(lo, hi);
}

}  // namespace

Interval::Interval(double v) : lo_(v), hi_(v) {
  if (std::isnan(v)) throw DomainError("interval from NaN");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval endpoint is NaN");
  if (lo > hi) throw DomainError("interval with lo > hi");
}

Interval Interval::from_int(Int128 n) {
  const double d = static_cast<double>(n);
  if (std::fabs(d) >= 0x1p126) throw DomainError("integer too large for interval conversion");
  const Int128 back = static_cast<Int128>(d);
  if (back == n) return Interval(d);
  if (back < n) return Interval(d, next_up(d));
  return Interval(next_down(d), d);
}

Interval Interval::from_ratio(Int128 num, Int128 den) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  return from_int(num) / from_int(den);
}

double Interval::mid() const {
  if (std::isinf(lo_) || std::isinf(hi_)) {
    if (std::isinf(lo_) && std::isinf(hi_)) return 0.0;
    return std::isinf(lo_) ? -kMax : kMax;
  }
  return 0.5 * lo_ + 0.5 * hi_;
}

double Interval::width() const { return add_up(hi_, -lo_); }

bool Interval::is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }

std::string Interval::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo_, hi_);
  return buf;
}

Interval operator+(const Interval& a, const Interval& b) {
  return finish(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Interval operator-(const Interval& a, const Interval& b) {
  return finish(add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo()));
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator*(const Interval& a, const Interval& b) {
  const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  if (al >= 0 && bl >= 0) return finish(mul_down(al, bl), mul_up(ah, bh));
  if (ah <= 0 && bh <= 0) return finish(mul_down(ah, bh), mul_up(al, bl));
  if (al >= 0 && bh <= 0) return finish(mul_down(ah, bl), mul_up(al, bh));
  if (ah <= 0 && bl >= 0) return finish(mul_down(al, bh), mul_up(ah, bl));
  const double lo = std::min({mul_down(al, bl), mul_down(al, bh), mul_down(ah, bl), mul_down(ah, bh)});
  const double hi = std::max({mul_up(al, bl), mul_up(al, bh), mul_up(ah, bl), mul_up(ah, bh)});
  return finish(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing zero: " + b.to_string());
  const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  const double lo = std::min({div_down(al, bl), div_down(al, bh), div_down(ah, bl), div_down(ah, bh)});
  const double hi = std::max({div_up(al, bl), div_up(al, bh), div_up(ah, bl), div_up(ah, bh)});
  return finish(lo, hi);
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0) throw DomainError("sqrt of an interval with negative part: " + a.to_string());
  return finish(sqrt_down(a.lo()), sqrt_up(a.hi()));
}

Interval powi(const Interval& a, unsigned n) {
  if (n == 0) return Interval(1.0);
  // Even powers of a sign-straddling interval start at zero.
  if (n % 2 == 0 && a.lo() < 0 && a.hi() > 0) {
    const Interval m(0.0, std::max(-a.lo(), a.hi()));
    return powi(m, n);
  }
  if (n % 2 == 0 && a.lo() < 0 && a.hi() <= 0) return powi(-a, n);
  Interval result(1.0);
  Interval base = a;
  for (unsigned e = n;;) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

Interval scale_int(const Interval& a, std::int64_t k) { return a * Interval::from_int(k); }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw DomainError("empty intersection of " + a.to_string() + " and " + b.to_string());
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Ordering compare(const Interval& a, const Interval& b) {
  if (certainly_less(a, b)) return Ordering::less;
  if (certainly_greater(a, b)) return Ordering::greater;
  return Ordering::overlap;
}

std::int64_t ceil_conservative(const Interval& x, CeilDirection direction) {
  if (!x.is_finite()) throw DomainError("ceil of a non-finite interval " + x.to_string());
  const double v = std::ceil(direction == CeilDirection::lower ? x.lo() : x.hi());
  if (std::fabs(v) >= 0x1p62) throw DomainError("ceil result outside 64-bit range");
  return static_cast<std::int64_t>(v);
}

double stress_factor() { return g_stress.load(std::memory_order_relaxed); }

void set_stress_factor(double factor) {
  if (!(factor >= 0) || std::isinf(factor)) throw UsageError("stress factor must be finite and nonnegative");
  g_stress.store(factor, std::memory_order_relaxed);
}

ScopedStress::ScopedStress(double factor) : previous_(stress_factor()) { set_stress_factor(factor); }

ScopedStress::~ScopedStress() { g_stress.store(previous_, std::memory_order_relaxed); }

}  // namespace sausage4
