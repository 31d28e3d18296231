#pragma once

// Unions of inclusive integer ranges.

#include <cstdint>
#include <vector>

namespace sausage4 {

struct Range {
  std::int64_t lo;
  std::int64_t hi;

  friend bool operator==(const Range&, const Range&) = default;
};

class CoverageSet {
 public:
  CoverageSet() = default;
  explicit CoverageSet(std::vector<Range> ranges);

  /// Ranges with lo > hi are ignored.  Call normalize() before querying.
  void add(std::int64_t lo, std::int64_t hi);
  void add(const CoverageSet& other);
  /// Sort, then merge overlapping and adjacent ranges.
  void normalize();

  const std::vector<Range>& ranges() const { return ranges_; }
  bool empty() const { return ranges_.empty(); }
  bool contains(std::int64_t n) const;
  /// The normalized range holding n, or nullptr.
  const Range* range_of(std::int64_t n) const;
  /// Every member of other is a member of this set.
  bool includes(const CoverageSet& other) const;
  std::int64_t cardinality() const;

  friend bool operator==(const CoverageSet&, const CoverageSet&) = default;

 private:
  std::vector<Range> ranges_;
  bool normalized_ = true;
};

/// Maximal sub-ranges of [from, to] not covered by cov.
std::vector<Range> find_gaps(const CoverageSet& cov, std::int64_t from, std::int64_t to);

}  // namespace sausage4
