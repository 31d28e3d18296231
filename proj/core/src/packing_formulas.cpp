#include "sausage4/packing_formulas.hpp"

#include <array>
#include <string>
#include <tuple>

#include "sausage4/constants.hpp"
#include "sausage4/errors.hpp"

namespace sausage4 {
namespace {

struct PowerSums {
  Int128 s1 = 0, s2 = 0, s3 = 0, s4 = 0;
};

PowerSums power_sums(const std::array<std::int64_t, 3>& h) {
  PowerSums s;
  for (Int128 v : h) {
    s.s1 += v;
    s.s2 += v * v;
    s.s3 += v * v * v;
    s.s4 += v * v * v * v;
  }
  return s;
}

std::int64_t narrow(Int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError(std::string(what) + " overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

Interval third(Int128 num) { return Interval::from_ratio(num, 3); }
Interval exact(Int128 v) { return Interval::from_int(v); }

void require_nonnegative(std::int64_t m, const char* what) {
  if (m < 0) throw DomainError(std::string(what) + " needs m >= 0");
}

}  // namespace

std::int64_t g_y(std::int64_t m) {
  require_nonnegative(m, "g_y");
  const Int128 x = m;
  return narrow((((4 * x + 8) * x + 8) * x + 4) * x + 1, "g_y");
}

std::int64_t g_truncated(const TruncationSpec& spec) {
  validate(spec);
  const Int128 m = spec.m;
  const PowerSums s = power_sums(spec.h);
  const Int128 six_g = 24 * m * m * m * m + (48 - 4 * s.s1) * m * m * m + (48 - 6 * s.s2 - 6 * s.s1) * m * m +
                       (24 - 4 * s.s3 - 6 * s.s2 - 4 * s.s1) * m + (6 + 2 * s.s4 - 2 * s.s3 - 5 * s.s2 - s.s1);
  if (six_g % 6 != 0) throw InternalError("lattice point count is not integral for " + to_string(spec));
  return narrow(six_g / 6, "g_truncated");
}

Interval vol_y_plus_ball(std::int64_t m) {
  require_nonnegative(m, "vol_y_plus_ball");
  return steiner_polynomial(m, {0, 0, 0});
}

SteinerBreakdown steiner_breakdown(std::int64_t m, std::int64_t h) {
  if (h < 0 || h > m) throw DomainError("steiner_breakdown needs 0 <= h <= m");
  const Int128 M = m, H = h, mh = M + H;
  const Interval& sqrt2 = constant(ConstantId::sqrt2);
  const Interval& sqrt3 = constant(ConstantId::sqrt3);
  const Interval& pi = constant(ConstantId::pi);
  const Interval& acos3 = constant(ConstantId::acos_one_third);
  const Interval& atan_s = constant(ConstantId::atan_silver);

  SteinerBreakdown b;
  b.vol4 = third(96 * M * M * M * M - 4 * (mh * mh * mh * mh - M * M * M * M - 3 * H * H * H * H));
  b.facet_term = third(8 * (25 * M * M * M - mh * mh * mh)) * sqrt2;
  b.face_term = third(2 * (24 * M * M - 2 * M * H - 7 * H * H)) * (sqrt3 * pi) + exact(6 * H * H) * pi;
  b.edge_term = exact(64 * M - 24 * H) * (Interval(3.0) * acos3 - pi) + exact(64 * H) * atan_s;
  b.ball_term = constant(ConstantId::kappa4);
  return b;
}

Interval steiner_polynomial(std::int64_t m, const std::array<std::int64_t, 3>& h) {
  require_nonnegative(m, "steiner_polynomial");
  for (auto v : h)
    if (v < 0 || v > m) throw DomainError("steiner_polynomial needs 0 <= h_i <= m");
  const Int128 M = m;
  const PowerSums s = power_sums(h);
  const Interval rational = third(96 * M * M * M * M - 16 * s.s1 * M * M * M - 24 * s.s2 * M * M - 16 * s.s3 * M + 8 * s.s4);
  const Interval root2 = third(192 * M * M * M - 24 * s.s1 * M * M - 24 * s.s2 * M - 8 * s.s3);
  const Interval root3_pi = third(48 * M * M - 4 * s.s1 * M - 14 * s.s2);
  const Interval pi_part = exact(-64 * M + 24 * s.s1 + 6 * s.s2);
  const Interval acos_part = exact(192 * M - 72 * s.s1);
  const Interval atan_part = exact(64 * s.s1);

  const Interval& pi = constant(ConstantId::pi);
  return rational + root2 * constant(ConstantId::sqrt2) + root3_pi * (constant(ConstantId::sqrt3) * pi) +
         pi_part * pi + acos_part * constant(ConstantId::acos_one_third) +
         atan_part * constant(ConstantId::atan_silver) + constant(ConstantId::kappa4);
}

Interval steiner_truncated(const TruncationSpec& spec) {
  validate(spec);
  return steiner_polynomial(spec.m, spec.h);
}

Interval sausage_hull_volume(std::int64_t n) {
  if (n <= 0) throw DomainError("sausage needs n >= 1, got " + std::to_string(n));
  return constant(ConstantId::kappa4) + Interval::from_int(2 * static_cast<Int128>(n - 1)) * constant(ConstantId::kappa3);
}

Interval sausage_density(std::int64_t n) {
  return Interval::from_int(n) * constant(ConstantId::kappa4) / sausage_hull_volume(n);
}

const char* to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::yes: return "yes";
    case Verdict3::no: return "no";
    case Verdict3::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void fill(PackingSummary& s) {
  s.density = Interval::from_int(s.points) * constant(ConstantId::kappa4) / s.hull_volume;
  s.volume_margin = sausage_hull_volume(s.points) - s.hull_volume;
  if (s.volume_margin.lo() > 0) s.denser = Verdict3::yes;
  else if (s.volume_margin.hi() <= 0) s.denser = Verdict3::no;
  else s.denser = Verdict3::inconclusive;
  std::tie(s.r_lo, s.r_hi) = removal_radius(s);
}

}  // namespace

PackingSummary summarize(const TruncationSpec& spec) {
  PackingSummary s;
  s.spec = spec;
  s.points = g_truncated(spec);
  s.hull_volume = steiner_truncated(spec);
  fill(s);
  return s;
}

PackingSummary summarize_sausage(std::int64_t n) {
  PackingSummary s;
  s.sausage = true;
  s.spec.m = 0;
  s.points = n;
  s.hull_volume = sausage_hull_volume(n);
  fill(s);
  return s;
}

Interval approx_density(const PackingSummary& summary, std::int64_t n) {
  if (n < 0 || n > summary.points)
    throw DomainError("approximate density needs 0 <= n <= " + std::to_string(summary.points));
  return Interval::from_int(n) * constant(ConstantId::kappa4) / summary.hull_volume;
}

std::pair<std::int64_t, std::int64_t> removal_radius(const PackingSummary& summary) {
  const Interval x = summary.volume_margin / (Interval(2.0) * constant(ConstantId::kappa3)) - Interval(1.0);
  const std::int64_t lo = ceil_conservative(x, CeilDirection::lower);
  const std::int64_t hi = ceil_conservative(x, CeilDirection::upper);
  return {lo > 0 ? lo : 0, hi > 0 ? hi : 0};
}

}  // namespace sausage4
