#include <cmath>
#include <random>

#include "doctest.h"
#include "mpfr_reference.hpp"
#include "sausage4/covering_search.hpp"

using namespace sausage4;

namespace {

const CoverageResult& main_coverage() {
  static const CoverageResult c = build_coverage(17, 104, CoverageMode::shrunken);
  return c;
}

}  // namespace

TEST_CASE("truncation enumeration") {
  CHECK(truncations(17, 8).size() == 165);
  CHECK(truncations(17, 8, false).size() == 729);
  CHECK(truncations(17, 0).size() == 1);
  CHECK(truncations(3, 8).size() == 4);
}

TEST_CASE("scan at m = 17") {
  const ScanResult s = scan_m17();
  CHECK(s.candidates == 165);
  REQUIRE(s.best.has_value());
  CHECK(s.best->spec.h == std::array<std::int64_t, 3>{1, 3, 4});
  CHECK(s.best->points == 338224);
  CHECK(s.best->r_lo == 28);
  CHECK(s.best->r_hi == 28);
  CHECK(s.flip[0].removed == 28);
  CHECK(s.flip[0].order == Ordering::greater);
  CHECK(s.flip[1].order == Ordering::less);
  CHECK(s.inconclusive == 0);
  REQUIRE(s.best_bound.has_value());
  CHECK(*s.best_bound == 338196);
}

TEST_CASE("scan with a single candidate") {
  const ScanResult s = scan_m17(0);
  CHECK(s.candidates == 1);
  REQUIRE(s.best.has_value());
  CHECK(s.best->points == 375769);
  CHECK_THROWS(scan_m17(9));
}

TEST_CASE("scan results do not depend on the worker count") {
  const ScanResult a = scan_m17(8, {1, true});
  const ScanResult b = scan_m17(8, {4, true});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].spec == b.rows[i].spec);
    CHECK(a.rows[i].density.lo() == b.rows[i].density.lo());
  }
}

TEST_CASE("coverage over the main range has no gap above the threshold") {
  const CoverageResult& c = main_coverage();
  CHECK(c.inconclusive == 0);
  CHECK(find_gaps(c.set, 516946, 459118697).empty());
  CHECK(c.set.contains(516946));
  CHECK_FALSE(c.set.contains(516945));
  const Contribution* w = c.witness(516946);
  REQUIRE(w != nullptr);
  CHECK(w->spec.m == 20);
  CHECK(w->spec.h == std::array<std::int64_t, 3>{4, 7, 9});
  CHECK(w->range.lo == 516946);
}

TEST_CASE("the count below the threshold is not covered by any truncation") {
  const std::int64_t m_cut = coverage_cutoff(516945);
  CHECK(m_cut >= 20);
  const CoverageResult inflated = build_coverage(1, m_cut, CoverageMode::inflated);
  CHECK_FALSE(inflated.set.contains(516945));
  const auto gaps = find_gaps(inflated.set, 516000, 516945);
  REQUIRE_FALSE(gaps.empty());
  CHECK(gaps.back() == Range{516837, 516945});
}

TEST_CASE("shrunken coverage is inside inflated coverage") {
  const CoverageResult s = build_coverage(17, 40, CoverageMode::shrunken);
  const CoverageResult i = build_coverage(17, 40, CoverageMode::inflated);
  CHECK(i.set.includes(s.set));
}

TEST_CASE("stored witnesses recompute") {
  const CoverageResult& c = main_coverage();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> pick(516946, 459118697);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t n = pick(rng);
    const Contribution* w = c.witness(n);
    REQUIRE(w != nullptr);
    const PackingSummary s = summarize(w->spec);
    CHECK(s.denser == Verdict3::yes);
    CHECK(s.points - s.r_lo <= n);
    CHECK(n <= s.points);
  }
}

TEST_CASE("the scale cutoff never discards a witness") {
  const std::int64_t top = 2000000;
  const CoverageResult wide = build_coverage(1, coverage_cutoff(top) + 3, CoverageMode::inflated);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> pick(1000, top);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t n = pick(rng);
    const std::int64_t cut = coverage_cutoff(n);
    for (const auto& c : wide.contributions)
      if (c.range.lo <= n && n <= c.range.hi) CHECK(c.spec.m <= cut);
  }
}

TEST_CASE("coverage is identical with and without canonical h-triples") {
  const CoverageResult a = build_coverage(17, 23, CoverageMode::shrunken, {1, true});
  const CoverageResult b = build_coverage(17, 23, CoverageMode::shrunken, {1, false});
  CHECK(a.set == b.set);
  CHECK(b.examined > a.examined);
}

TEST_CASE("coverage does not depend on the worker count") {
  const CoverageResult a = build_coverage(17, 30, CoverageMode::inflated, {1, true});
  const CoverageResult b = build_coverage(17, 30, CoverageMode::inflated, {3, true});
  CHECK(a.set == b.set);
  REQUIRE(a.contributions.size() == b.contributions.size());
  for (std::size_t i = 0; i < a.contributions.size(); ++i) CHECK(a.contributions[i].spec == b.contributions[i].spec);
}

TEST_CASE("tail polynomials") {
  const TailPolynomials t = tail_polynomials();
  const double p[5] = {2, -4, 8, -8, 4};
  for (int i = 0; i < 5; ++i) CHECK(t.numerator[i].lo() == p[i]);
  CHECK(t.g[7].lo() == 0);
  CHECK(t.g[7].hi() == 0);
  const reference::Real lead = reference::Real(256) * (reference::Real::sqrt_of(2) + reference::Real(1));
  CHECK(reference::contains(t.g[6], lead));
  for (int i = 0; i <= 5; ++i) CHECK(std::fabs(t.g[i].mid()) < 4345);
  // numerator(x) = G(Y_{x-1}) + 1
  for (std::int64_t x = 1; x < 10; ++x)
    CHECK(evaluate(t.numerator.data(), 5, Interval::from_int(x)).lo() == static_cast<double>(g_y(x - 1) + 1));
}

TEST_CASE("tail certificate") {
  const TailCertificate c = certify_tail();
  CHECK(c.verdict == Verdict::certified);
  CHECK(c.endpoint_first == 459118698);
  CHECK(c.at.n == 459118698);
  CHECK(c.below.n == 459118697);
  CHECK(std::fabs(c.below.approx.mid() - 0.5890486228) < 5e-11);
  CHECK(std::fabs(c.at.approx.mid() - 0.5890486241) < 5e-11);
  CHECK(c.chained_to == 200);
  CHECK(c.extension_ok);

  const TailPolynomials& t = c.poly;
  const Interval f43 = evaluate(t.numerator.data(), 5, Interval(43.0)) / evaluate(t.denominator.data(), 5, Interval(43.0));
  const Interval f44 = evaluate(t.numerator.data(), 5, Interval(44.0)) / evaluate(t.denominator.data(), 5, Interval(44.0));
  CHECK(certainly_less(f43, f44));
}

TEST_CASE("the untruncated 24-cell below the tail endpoint does not chain into it") {
  const PackingSummary y = summarize({104, {0, 0, 0}});
  CHECK(y.points - y.r_lo > g_y(103) + 1);
}

TEST_CASE("theorem runs") {
  const auto [small, large] = verify_theorems();
  CHECK(small.verdict == Verdict::certified);
  REQUIRE(small.bound.has_value());
  CHECK(*small.bound == 338196);
  CHECK(*small.bound <= 338224);
  CHECK(large.verdict == Verdict::certified);
  REQUIRE(large.bound.has_value());
  CHECK(*large.bound == 516946);
  CHECK(large.gaps.empty());
}

TEST_CASE("a heavily widened kernel gives up instead of answering wrongly") {
  ScopedStress stress(1e6);
  const VerificationReport r = verify_large_threshold();
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK_FALSE(r.problems.empty());
}
