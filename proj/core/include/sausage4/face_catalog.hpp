#pragma once

// Boundary cells of the single-facet truncation t_h(Y_m): 3-dimensional
// facets, 2-dimensional faces and edges, each with its multiplicity, its
// measure and the external angle of the polytope at that cell.

#include <cstdint>
#include <string>
#include <vector>

#include "sausage4/interval.hpp"

namespace sausage4 {

enum class CellKind { facet, face, edge };

struct CatalogEntry {
  std::string name;
  CellKind kind;
  std::int64_t count;
  Interval measure;  // volume, area or length
  Interval angle;    // external angle, normalized to (0, 1)
};

/// Requires 0 <= h <= m; DomainError otherwise.
std::vector<CatalogEntry> face_edge_catalog(std::int64_t m, std::int64_t h);

/// Sum over cells of the given kind of count * measure * angle * kappa_k,
/// where k = 4 - dim(cell).  Reproduces the Steiner facet, face and edge terms.
Interval catalog_term(const std::vector<CatalogEntry>& catalog, CellKind kind);

/// Area of the spherical triangle with side arcs a12, a13, a23.
/// DomainError unless every half-angle tangent argument lies in (0, pi/2).
Interval lhuilier_area(const Interval& a12, const Interval& a13, const Interval& a23);

}  // namespace sausage4
