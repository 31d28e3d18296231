#include "doctest.h"
#include "sausage4/coverage.hpp"
#include "sausage4/errors.hpp"

using namespace sausage4;

TEST_CASE("normalization merges overlapping and adjacent ranges") {
  CoverageSet s;
  s.add(10, 20);
  s.add(21, 25);
  s.add(5, 12);
  s.add(40, 50);
  s.add(45, 46);
  s.add(9, 3);
  s.normalize();
  REQUIRE(s.ranges().size() == 2);
  CHECK(s.ranges()[0] == Range{5, 25});
  CHECK(s.ranges()[1] == Range{40, 50});
  CHECK(s.cardinality() == 21 + 11);
}

TEST_CASE("membership") {
  const CoverageSet s({{1, 3}, {7, 9}});
  CHECK(s.contains(1));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.contains(8));
  CHECK_FALSE(s.contains(0));
  CHECK_FALSE(s.contains(10));
  CHECK(s.range_of(8)->lo == 7);
}

TEST_CASE("queries before normalization are refused") {
  CoverageSet s;
  s.add(1, 2);
  CHECK_THROWS_AS(s.contains(1), UsageError);
}

TEST_CASE("gaps") {
  const CoverageSet s({{10, 20}, {30, 40}});
  CHECK(find_gaps(s, 10, 40) == std::vector<Range>{{21, 29}});
  CHECK(find_gaps(s, 0, 50) == std::vector<Range>{{0, 9}, {21, 29}, {41, 50}});
  CHECK(find_gaps(s, 12, 18).empty());
  CHECK(find_gaps(s, 22, 25) == std::vector<Range>{{22, 25}});
  CHECK(find_gaps(CoverageSet{}, 5, 6) == std::vector<Range>{{5, 6}});
  CHECK_THROWS_AS(find_gaps(s, 5, 4), UsageError);
}

TEST_CASE("inclusion") {
  const CoverageSet big({{1, 100}, {200, 300}});
  CHECK(big.includes(CoverageSet({{5, 10}, {250, 300}})));
  CHECK_FALSE(big.includes(CoverageSet({{95, 105}})));
  CHECK(big.includes(CoverageSet{}));
}
