#pragma once

// Closed-form counts and Steiner volumes of truncated 24-cells, sausage
// quantities, densities and removal radii.  Integer parts are exact; every
// real quantity is an Interval.

#include <cstdint>
#include <utility>

#include "sausage4/d4_lattice.hpp"
#include "sausage4/interval.hpp"

namespace sausage4 {

/// 4m^4 + 8m^3 + 8m^2 + 4m + 1.
std::int64_t g_y(std::int64_t m);
/// Lattice points of t_h(Y_m); throws InternalError if the rational
/// assembly is not integral.
std::int64_t g_truncated(const TruncationSpec& spec);

/// vol(Y_m + B^4).
Interval vol_y_plus_ball(std::int64_t m);

struct SteinerBreakdown {
  Interval vol4;
  Interval facet_term;
  Interval face_term;
  Interval edge_term;
  Interval ball_term;

  Interval total() const { return vol4 + facet_term + face_term + edge_term + ball_term; }
};

/// Components of vol(t_h(Y_m) + B^4) for one truncated facet, 0 <= h <= m.
SteinerBreakdown steiner_breakdown(std::int64_t m, std::int64_t h);
/// vol(t_h(Y_m) + B^4) as one polynomial in m and the power sums of h.
Interval steiner_truncated(const TruncationSpec& spec);
/// Same polynomial without the disjointness range check (0 <= h_i <= m).
Interval steiner_polynomial(std::int64_t m, const std::array<std::int64_t, 3>& h);

/// kappa4 + 2(n-1) kappa3; DomainError for n <= 0.
Interval sausage_hull_volume(std::int64_t n);
/// n kappa4 / sausage_hull_volume(n).
Interval sausage_density(std::int64_t n);

enum class Verdict3 { yes, no, inconclusive };
const char* to_string(Verdict3 v);

struct PackingSummary {
  TruncationSpec spec;
  bool sausage = false;
  std::int64_t points = 0;
  Interval hull_volume;
  Interval density;
  /// vol(conv S_points + B) - hull_volume; positive exactly when denser.
  Interval volume_margin;
  Verdict3 denser = Verdict3::no;
  std::int64_t r_lo = 0;
  std::int64_t r_hi = 0;
};

PackingSummary summarize(const TruncationSpec& spec);
PackingSummary summarize_sausage(std::int64_t n);

/// n kappa4 / hull_volume for 0 <= n <= points; DomainError otherwise.
Interval approx_density(const PackingSummary& summary, std::int64_t n);

/// Bounds (r_lo, r_hi) on the number of spheres that can be removed while
/// the approximate density still beats the sausage of the remaining count.
std::pair<std::int64_t, std::int64_t> removal_radius(const PackingSummary& summary);

}  // namespace sausage4
