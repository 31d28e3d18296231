#include "sausage4/d4_lattice.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "sausage4/errors.hpp"

namespace sausage4 {
namespace {

constexpr Vec4 kNormal1{1, 1, 0, 0};
constexpr Vec4 kNormal16{-1, 0, -1, 0};
constexpr Vec4 kNormal17{0, -1, 1, 0};

std::vector<FacetNormal> build_normals() {
  std::vector<Vec4> all;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec4 n{0, 0, 0, 0};
          n[i] = si;
          n[j] = sj;
          all.push_back(n);
        }
  std::sort(all.begin(), all.end(), std::greater<>());

  std::vector<FacetNormal> out(24);
  out[0] = {kNormal1, 1};
  out[15] = {kNormal16, 16};
  out[16] = {kNormal17, 17};
  std::size_t slot = 0;
  for (const auto& n : all) {
    if (n == kNormal1 || n == kNormal16 || n == kNormal17) continue;
    while (slot == 0 || slot == 15 || slot == 16) ++slot;
    out[slot] = {n, static_cast<int>(slot + 1)};
    ++slot;
  }
  return out;
}

bool same_parity(std::int64_t a, std::int64_t b) { return ((a ^ b) & 1) == 0; }

template <typename Visit>
void walk_box(const TruncationSpec& spec, std::int64_t x0, Visit&& visit) {
  const std::int64_t r = 2 * spec.m;
  Vec4 x{x0, 0, 0, 0};
  for (x[1] = -r; x[1] <= r; ++x[1]) {
    if (!same_parity(x[0], x[1])) continue;
    for (x[2] = -r; x[2] <= r; ++x[2]) {
      if (!same_parity(x[0], x[2])) continue;
      for (x[3] = -r; x[3] <= r; ++x[3]) {
        if (!same_parity(x[0], x[3])) continue;
        if (inside(spec.m, spec.h, x)) visit(x);
      }
    }
  }
}

void check_cap(const TruncationSpec& spec, const OracleOptions& options) {
  validate(spec);
  if (spec.m > options.max_m)
    throw ResourceError("enumeration oracle capped at m=" + std::to_string(options.max_m) + ", got m=" +
                        std::to_string(spec.m));
}

}  // namespace

std::int64_t max_layers(std::int64_t m) { return m >= 1 ? (m - 1) / 2 : 0; }

void validate(const TruncationSpec& spec) {
  if (spec.m < 1) throw UsageError("m must be positive, got " + std::to_string(spec.m));
  const std::int64_t cap = max_layers(spec.m);
  for (auto v : spec.h)
    if (v < 0 || v > cap)
      throw UsageError("h=" + std::to_string(v) + " outside the disjointness range [0, " + std::to_string(cap) +
                       "] for m=" + std::to_string(spec.m));
}

TruncationSpec canonical(const TruncationSpec& spec) {
  TruncationSpec c = spec;
  std::sort(c.h.begin(), c.h.end());
  return c;
}

std::string to_string(const TruncationSpec& spec) {
  return "m=" + std::to_string(spec.m) + " h=(" + std::to_string(spec.h[0]) + "," + std::to_string(spec.h[1]) +
         "," + std::to_string(spec.h[2]) + ")";
}

bool is_d4_point(const Vec4& x) {
  return same_parity(x[0], x[1]) && same_parity(x[0], x[2]) && same_parity(x[0], x[3]);
}

std::int64_t dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

std::int64_t squared_distance(const Vec4& a, const Vec4& b) {
  std::int64_t s = 0;
  for (int i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

const std::vector<FacetNormal>& facet_normals() {
  static const std::vector<FacetNormal> normals = build_normals();
  return normals;
}

const FacetNormal& facet(int index) {
  if (index < 1 || index > 24) throw UsageError("facet index must be in 1..24");
  return facet_normals()[index - 1];
}

bool inside(std::int64_t m, const std::array<std::int64_t, 3>& h, const Vec4& x) {
  for (const auto& f : facet_normals()) {
    std::int64_t bound = 2 * m;
    if (f.index == 1) bound -= 2 * h[0];
    else if (f.index == 16) bound -= 2 * h[1];
    else if (f.index == 17) bound -= 2 * h[2];
    if (dot(f.n, x) > bound) return false;
  }
  return true;
}

std::int64_t count_points_oracle(const TruncationSpec& spec, const OracleOptions& options) {
  check_cap(spec, options);
  const std::int64_t r = 2 * spec.m;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::int64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    std::int64_t count = 0;
    for (std::int64_t x0 = -r + w; x0 <= r; x0 += workers) walk_box(spec, x0, [&](const Vec4&) { ++count; });
    partial[w] = count;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::int64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::vector<Vec4> enumerate_points(const TruncationSpec& spec, const OracleOptions& options) {
  check_cap(spec, options);
  std::vector<Vec4> out;
  for (std::int64_t x0 = -2 * spec.m; x0 <= 2 * spec.m; ++x0) walk_box(spec, x0, [&](const Vec4& x) { out.push_back(x); });
  return out;
}

std::vector<PointCheck> check_representative_points(std::int64_t m, std::int64_t h) {
  if (h < 1 || h > m - 1)
    throw UsageError("representative points need 1 <= h <= m-1, got m=" + std::to_string(m) + " h=" +
                     std::to_string(h));
  const std::array<std::int64_t, 3> trunc{h, 0, 0};
  const std::int64_t level = 2 * (m - h);
  std::vector<PointCheck> report;
  auto expect = [&](const std::string& claim, const std::string& what, bool ok) {
    report.push_back({claim, what, ok});
    if (!ok) throw VerificationFailure(claim + ": " + what + " fails at m=" + std::to_string(m) + " h=" + std::to_string(h));
  };
  auto on_lattice_face = [&](const Vec4& v) { return is_d4_point(v) && inside(m, trunc, v) && dot(kNormal1, v) == level; };

  const Vec4 v0{2 * m - h, -h, h, -h};
  expect("claim 1", "vertex (2m-h,-h,h,-h) is a D4 point on the truncating hyperplane", on_lattice_face(v0));

  const Vec4 step_square{2 * m - h, -h, h, 2 - h};
  const Vec4 step_hexagon{2 * m - h - 1, 1 - h, h + 1, -h - 1};
  expect("claim 2", "first point along the square edge is a D4 point", on_lattice_face(step_square));
  expect("claim 2", "first point along the square edge is at distance 2", squared_distance(step_square, v0) == 4);
  expect("claim 2", "first point along the hexagon edge is a D4 point", on_lattice_face(step_hexagon));
  expect("claim 2", "first point along the hexagon edge is at distance 2", squared_distance(step_hexagon, v0) == 4);

  const std::array<Vec4, 4> square{{{2 * m - h, -h, h, h},
                                    {2 * m - h, -h, h - 2, h},
                                    {2 * m - h, -h, h - 2, h - 2},
                                    {2 * m - h, -h, h, h - 2}}};
  bool square_ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    square_ok = square_ok && on_lattice_face(square[i]);
    square_ok = square_ok && squared_distance(square[i], square[(i + 1) % 4]) == 4;
  }
  square_ok = square_ok && squared_distance(square[0], square[2]) == 8 && squared_distance(square[1], square[3]) == 8;
  expect("claim 3", "square cell on the truncating facet has side 2 and diagonal 2*sqrt(2)", square_ok);

  const std::array<Vec4, 3> triangle{{{2 * m - h, -h, h, h}, {2 * m - h - 1, 1 - h, h + 1, h + 1}, {2 * m - h - 1, 1 - h, h + 1, h - 1}}};
  const Vec4 side_normal{1, 0, 1, 0};
  bool triangle_ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    triangle_ok = triangle_ok && on_lattice_face(triangle[i]) && dot(side_normal, triangle[i]) == 2 * m;
    triangle_ok = triangle_ok && squared_distance(triangle[i], triangle[(i + 1) % 3]) == 4;
  }
  expect("claim 3", "triangle cell on the hexagonal face is equilateral with side 2", triangle_ok);
  return report;
}

}  // namespace sausage4
