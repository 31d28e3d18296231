#include "sausage4/coverage.hpp"

#include <algorithm>
#include <utility>

#include "sausage4/errors.hpp"

namespace sausage4 {

CoverageSet::CoverageSet(std::vector<Range> ranges) : ranges_(std::move(ranges)), normalized_(false) { normalize(); }

void CoverageSet::add(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return;
  ranges_.push_back({lo, hi});
  normalized_ = false;
}

void CoverageSet::add(const CoverageSet& other) {
  ranges_.insert(ranges_.end(), other.ranges_.begin(), other.ranges_.end());
  normalized_ = false;
}

void CoverageSet::normalize() {
  if (normalized_) return;
  std::sort(ranges_.begin(), ranges_.end(), [](const Range& a, const Range& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<Range> merged;
  for (const auto& r : ranges_) {
    if (!merged.empty() && r.lo <= merged.back().hi + 1) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
    } else {
      merged.push_back(r);
    }
  }
  ranges_ = std::move(merged);
  normalized_ = true;
}

const Range* CoverageSet::range_of(std::int64_t n) const {
  if (!normalized_) throw UsageError("coverage set queried before normalize()");
  auto it = std::upper_bound(ranges_.begin(), ranges_.end(), n, [](std::int64_t v, const Range& r) { return v < r.lo; });
  if (it == ranges_.begin()) return nullptr;
  --it;
  return n <= it->hi ? &*it : nullptr;
}

bool CoverageSet::contains(std::int64_t n) const { return range_of(n) != nullptr; }

bool CoverageSet::includes(const CoverageSet& other) const {
  for (const auto& r : other.ranges()) {
    const Range* home = range_of(r.lo);
    if (home == nullptr || home->hi < r.hi) return false;
  }
  return true;
}

std::int64_t CoverageSet::cardinality() const {
  std::int64_t total = 0;
  for (const auto& r : ranges_) total += r.hi - r.lo + 1;
  return total;
}

std::vector<Range> find_gaps(const CoverageSet& cov, std::int64_t from, std::int64_t to) {
  if (from > to) throw UsageError("find_gaps needs from <= to");
  std::vector<Range> gaps;
  std::int64_t cursor = from;
  for (const auto& r : cov.ranges()) {
    if (r.hi < cursor) continue;
    if (r.lo > to) break;
    if (r.lo > cursor) gaps.push_back({cursor, r.lo - 1});
    if (r.hi >= to) return gaps;
    cursor = r.hi + 1;
  }
  gaps.push_back({cursor, to});
  return gaps;
}

}  // namespace sausage4
