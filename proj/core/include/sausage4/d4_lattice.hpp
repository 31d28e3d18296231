#pragma once

// The D4 lattice in the scaling where the minimal distance is 2: integer
// 4-vectors whose coordinates share one parity.  The 24-cell Y_m is
// { y : n.y <= 2m } over the 24 signed permutations n of (1,1,0,0).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sausage4 {

using Vec4 = std::array<std::int64_t, 4>;

struct FacetNormal {
  Vec4 n;
  int index;  // 1..24
};

/// Y_m with h[0], h[1], h[2] layers sliced off facets 1, 16 and 17.
struct TruncationSpec {
  std::int64_t m = 1;
  std::array<std::int64_t, 3> h{0, 0, 0};

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

/// Largest layer count keeping the three truncated facets disjoint.
std::int64_t max_layers(std::int64_t m);
/// Throws UsageError unless m >= 1 and 0 <= h_i <= max_layers(m).
void validate(const TruncationSpec& spec);
/// h sorted ascending.
TruncationSpec canonical(const TruncationSpec& spec);
std::string to_string(const TruncationSpec& spec);

bool is_d4_point(const Vec4& x);
std::int64_t dot(const Vec4& a, const Vec4& b);
std::int64_t squared_distance(const Vec4& a, const Vec4& b);

const std::vector<FacetNormal>& facet_normals();
const FacetNormal& facet(int index);

/// Membership in t_h(Y_m) without any range check on h.
bool inside(std::int64_t m, const std::array<std::int64_t, 3>& h, const Vec4& x);

struct OracleOptions {
  std::int64_t max_m = 17;
  unsigned workers = 1;
};

/// |t_h(Y_m) cap D4| by enumeration of the box [-2m, 2m]^4.
/// Throws ResourceError when m exceeds options.max_m.
std::int64_t count_points_oracle(const TruncationSpec& spec, const OracleOptions& options = {});
/// The enumerated points themselves, in lexicographic order.
std::vector<Vec4> enumerate_points(const TruncationSpec& spec, const OracleOptions& options = {});

struct PointCheck {
  std::string claim;
  std::string what;
  bool passed;
};

/// Integer checks of the representative vertices of the single-facet
/// truncation t_h(Y_m).  Requires 1 <= h <= m - 1 (UsageError otherwise);
/// throws VerificationFailure naming the first failing claim.
std::vector<PointCheck> check_representative_points(std::int64_t m, std::int64_t h);

}  // namespace sausage4
