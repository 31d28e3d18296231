#include "sausage4/face_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sausage4/constants.hpp"
#include "sausage4/errors.hpp"

namespace sausage4 {
namespace {

Interval ratio(Int128 num, Int128 den) { return Interval::from_ratio(num, den); }
Interval exact(Int128 v) { return Interval::from_int(v); }

// libm tan/atan are not correctly rounded; 8 ulp either way is well beyond
// their documented error on glibc.
constexpr int kLibmSlack = 8;

double widen(double v, int ulps, double toward) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, toward);
  return v;
}

Interval tan_increasing(const Interval& x) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return Interval(std::max(0.0, widen(std::tan(x.lo()), kLibmSlack, -inf)), widen(std::tan(x.hi()), kLibmSlack, inf));
}

Interval atan_increasing(const Interval& x) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return Interval(widen(std::atan(x.lo()), kLibmSlack, -inf), widen(std::atan(x.hi()), kLibmSlack, inf));
}

}  // namespace

std::vector<CatalogEntry> face_edge_catalog(std::int64_t m, std::int64_t h) {
  if (h < 0 || h > m) throw DomainError("face_edge_catalog needs 0 <= h <= m");
  const Int128 M = m, H = h, mh = M + H;
  const Interval& sqrt2 = constant(ConstantId::sqrt2);
  const Interval& sqrt3 = constant(ConstantId::sqrt3);
  const Interval& pi = constant(ConstantId::pi);

  const Interval half(0.5);
  const Interval quarter(0.25);
  const Interval sixth = ratio(1, 6);
  const Interval triangle_edge = (Interval(3.0) * constant(ConstantId::acos_one_third) - pi) / (Interval(4.0) * pi);
  const Interval square_edge = constant(ConstantId::atan_silver) / pi;

  return {
      {"truncating facet", CellKind::facet, 1, ratio(8 * (mh * mh * mh - 3 * H * H * H), 3) * sqrt2, half},
      {"facet with hexagon", CellKind::facet, 8, ratio(2 * (5 * M * M * M + 3 * H * H * H - mh * mh * mh), 3) * sqrt2, half},
      {"facet with square", CellKind::facet, 6, ratio(4 * (2 * M * M * M - H * H * H), 3) * sqrt2, half},
      {"octahedron", CellKind::facet, 9, ratio(8 * M * M * M, 3) * sqrt2, half},
      {"square", CellKind::face, 6, exact(4 * H * H), quarter},
      {"hexagon", CellKind::face, 8, exact(mh * mh - 3 * H * H) * sqrt3, sixth},
      {"shrunken triangle", CellKind::face, 12, exact((M - H) * (M - H)) * sqrt3, sixth},
      {"trapezium", CellKind::face, 24, exact(M * M - H * H) * sqrt3, sixth},
      {"triangle", CellKind::face, 52, exact(M * M) * sqrt3, sixth},
      {"square edge", CellKind::edge, 24, exact(2 * H), square_edge},
      {"hexagon edge", CellKind::edge, 12, exact(2 * (M - H)), triangle_edge},
      {"shortened edge", CellKind::edge, 24, exact(2 * (M - H)), triangle_edge},
      {"edge", CellKind::edge, 60, exact(2 * M), triangle_edge},
  };
}

Interval catalog_term(const std::vector<CatalogEntry>& catalog, CellKind kind) {
  Interval kappa;
  switch (kind) {
    case CellKind::facet: kappa = Interval(2.0); break;
    case CellKind::face: kappa = constant(ConstantId::kappa2); break;
    case CellKind::edge: kappa = constant(ConstantId::kappa3); break;
  }
  Interval sum(0.0);
  for (const auto& e : catalog)
    if (e.kind == kind) sum += Interval::from_int(e.count) * e.measure * e.angle;
  return sum * kappa;
}

Interval lhuilier_area(const Interval& a12, const Interval& a13, const Interval& a23) {
  const Interval& pi = constant(ConstantId::pi);
  const Interval s = (a12 + a13 + a23) * Interval(0.5);
  const Interval args[4] = {s * Interval(0.5), (s - a12) * Interval(0.5), (s - a13) * Interval(0.5),
                            (s - a23) * Interval(0.5)};
  const Interval right = pi * Interval(0.5);
  Interval product(1.0);
  for (const auto& t : args) {
    if (!(t.lo() > 0) || !(t.hi() < right.lo()))
      throw DomainError("not a valid spherical triangle: tangent argument " + t.to_string());
    product *= tan_increasing(t);
  }
  return Interval(4.0) * atan_increasing(sqrt(product));
}

}  // namespace sausage4
