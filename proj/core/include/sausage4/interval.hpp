#pragma once

// Closed intervals with binary64 endpoints and outward rounding.
//
// Every endpoint is computed in round-to-nearest and then corrected with an
// error-free transformation (TwoSum, or an FMA residual for products,
// quotients and square roots).  When the residual shows the rounded value
// landed on the unsafe side, the endpoint is moved one ulp outward; exact
// results are left alone.  This never touches the hardware rounding mode.

#include <cstdint>
#include <string>

namespace sausage4 {

__extension__ using Int128 = __int128;

class Interval {
 public:
  constexpr Interval() = default;
  /// Degenerate interval [v, v]; NaN throws DomainError.
  Interval(double v);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  /// Enclosure of an integer that may not be representable in binary64.
  static Interval from_int(Int128 n);
  static Interval from_int(std::int64_t n) { return from_int(static_cast<Int128>(n)); }
  /// Enclosure of num/den.
  static Interval from_ratio(Int128 num, Int128 den);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const;

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool is_finite() const;

  std::string to_string() const;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

Interval sqrt(const Interval& a);
Interval powi(const Interval& a, unsigned n);
Interval scale_int(const Interval& a, std::int64_t k);
Interval hull(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);

/// a < b for every pair of members.
inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
inline bool certainly_greater(const Interval& a, const Interval& b) { return a.lo() > b.hi(); }

enum class Ordering { less, greater, overlap };
Ordering compare(const Interval& a, const Interval& b);

enum class CeilDirection { lower, upper };
/// lower: ceil(x.lo), a lower bound of ceil(t) for all t in x.
/// upper: ceil(x.hi), an upper bound.
std::int64_t ceil_conservative(const Interval& x, CeilDirection direction);

// Precision stress.  A factor F > 0 widens every kernel result by an extra
// F ulps on each side.  Used to demonstrate that certification degrades to
// INCONCLUSIVE rather than to a wrong verdict.
double stress_factor();
void set_stress_factor(double factor);

class ScopedStress {
 public:
  explicit ScopedStress(double factor);
  ~ScopedStress();
  ScopedStress(const ScopedStress&) = delete;
  ScopedStress& operator=(const ScopedStress&) = delete;

 private:
  double previous_;
};

}  // namespace sausage4
