#pragma once

// Searches over truncated 24-cells: the best denser packing at a fixed
// scale, coverage of sphere counts by removal intervals, the polynomial
// tail argument for large scales, and the two theorem-level runs.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sausage4/coverage.hpp"
#include "sausage4/d4_lattice.hpp"
#include "sausage4/interval.hpp"
#include "sausage4/packing_formulas.hpp"
#include "sausage4/report.hpp"

namespace sausage4 {

struct SearchOptions {
  unsigned workers = 1;
  /// Enumerate only sorted h-triples.  Turning this off visits all
  /// permutations; the resulting coverage must be identical.
  bool canonicalize = true;
};

/// Every h-triple in range for m with entries <= h_max, in lexicographic order.
std::vector<TruncationSpec> truncations(std::int64_t m, std::int64_t h_max, bool canonical_only = true);

// ---------------------------------------------------------------------------
// Fixed-scale scan

struct FlipCheck {
  std::int64_t removed;  // spheres taken away from the packing
  std::int64_t n;        // spheres left
  Interval approx;       // approximate density with n spheres
  Interval sausage;      // sausage density with n spheres
  Ordering order;
};

struct ScanResult {
  std::int64_t m = 0;
  std::int64_t h_max = 0;
  std::int64_t candidates = 0;
  std::int64_t denser = 0;
  std::int64_t inconclusive = 0;
  std::vector<PackingSummary> rows;      // every candidate, in enumeration order
  std::optional<PackingSummary> best;    // certified denser, smallest point count
  std::array<FlipCheck, 2> flip{};       // at r_lo and r_lo + 1 for best
  /// Smallest certified bound G - r_lo over all certified rows.
  std::optional<std::int64_t> best_bound;
  std::optional<TruncationSpec> best_bound_spec;
};

ScanResult scan(std::int64_t m, std::int64_t h_max, const SearchOptions& options = {});
inline ScanResult scan_m17(std::int64_t h_max = 8, const SearchOptions& options = {}) { return scan(17, h_max, options); }

/// Approximate-density comparisons at k and k + 1 removed spheres.
std::array<FlipCheck, 2> flip_checks(const PackingSummary& summary, std::int64_t k);

// ---------------------------------------------------------------------------
// Coverage

enum class CoverageMode { shrunken, inflated };
const char* to_string(CoverageMode mode);

struct Contribution {
  TruncationSpec spec;
  std::int64_t points;
  Range range;
  Verdict3 denser;
};

struct CoverageResult {
  CoverageMode mode = CoverageMode::shrunken;
  std::int64_t m_from = 0;
  std::int64_t m_to = 0;
  CoverageSet set;
  std::vector<Contribution> contributions;  // sorted by (range.lo, range.hi, m, h)
  std::int64_t examined = 0;
  std::int64_t inconclusive = 0;

  /// A contribution whose range holds n, or nullptr.
  const Contribution* witness(std::int64_t n) const;
};

CoverageResult build_coverage(std::int64_t m_from, std::int64_t m_to, CoverageMode mode,
                              const SearchOptions& options = {});

/// The largest m whose truncations can still cover some count <= n_max.
/// Every covered count N of a body with hull volume V satisfies
/// N > V / (2 kappa3), and the most truncated body at scale m has a
/// volume that never decreases with m.
std::int64_t coverage_cutoff(std::int64_t n_max);

// ---------------------------------------------------------------------------
// Tail argument for Y_m, m large

/// numerator(x) = G(Y_{x-1}) + 1, denominator(x) = vol(Y_x + B^4), and
/// g = numerator' * denominator - numerator * denominator'.
struct TailPolynomials {
  std::array<Interval, 5> numerator;
  std::array<Interval, 5> denominator;
  std::array<Interval, 8> g;
};

TailPolynomials tail_polynomials();
Interval evaluate(const Interval* coefficients, std::size_t count, const Interval& x);

struct TailOptions {
  std::int64_t monotone_from = 43;
  double coefficient_bound = 4345.0;
  std::int64_t endpoint_m = 104;
  std::int64_t chain_to = 200;
};

struct TailCertificate {
  TailPolynomials poly;
  Verdict verdict = Verdict::inconclusive;
  bool leading_ok = false;
  bool top_vanishes = false;
  bool coefficients_ok = false;
  bool positivity_ok = false;
  bool endpoint_ok = false;
  bool chaining_ok = false;
  bool extension_ok = false;
  std::int64_t endpoint_points = 0;  // G(Y_endpoint)
  std::int64_t endpoint_first = 0;   // smallest covered count of Y_endpoint
  FlipCheck below{};                 // one sphere fewer than endpoint_first
  FlipCheck at{};                    // exactly endpoint_first
  std::int64_t chained_to = 0;
  std::vector<std::string> problems;
};

TailCertificate certify_tail(const TailOptions& options = {});
VerificationReport tail_check(const TailOptions& options = {});

// ---------------------------------------------------------------------------
// Theorem-level runs

struct TheoremOptions {
  SearchOptions search;
  std::int64_t scan_m = 17;
  std::int64_t h_max = 8;
  std::int64_t cover_from = 17;
  std::int64_t cover_to = 104;
  TailOptions tail;
  /// The headline bound printed for the smaller threshold; the report says
  /// whether the computed bound agrees.
  std::int64_t printed_small_bound = 338196;
  std::int64_t printed_large_bound = 516946;
};

VerificationReport verify_small_threshold(const TheoremOptions& options = {});
VerificationReport verify_large_threshold(const TheoremOptions& options = {});
std::pair<VerificationReport, VerificationReport> verify_theorems(const TheoremOptions& options = {});

}  // namespace sausage4
