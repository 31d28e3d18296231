#include <cmath>
#include <limits>

#include "doctest.h"
#include "kernel_fuzz.hpp"
#include "sausage4/errors.hpp"
#include "sausage4/interval.hpp"

using sausage4::Interval;

TEST_CASE("addition encloses the endpoint sums") {
  const Interval r = Interval(1, 2) + Interval(3, 4);
  CHECK(r.contains(Interval(4, 6)));
  CHECK(r.lo() == 4);
  CHECK(r.hi() == 6);
}

TEST_CASE("multiplication across zero uses all sign cases") {
  const Interval r = Interval(-1, 2) * Interval(3, 4);
  CHECK(r.contains(Interval(-4, 8)));
  CHECK(r.lo() == -4);
  CHECK(r.hi() == 8);
  CHECK((Interval(-3, -2) * Interval(-5, 4)).contains(Interval(-12, 15)));
}

TEST_CASE("sqrt of an exact square stays tight") {
  const Interval r = sausage4::sqrt(Interval(4, 4));
  CHECK(r.contains(2.0));
  CHECK(r.hi() - r.lo() <= 2 * (std::nextafter(2.0, 3.0) - 2.0));
}

TEST_CASE("inexact results are widened outward") {
  const Interval third = Interval(1.0) / Interval(3.0);
  CHECK(third.lo() < third.hi());
  CHECK(oracle::contains(third, mpq_class(1, 3)));
  const Interval tenth = Interval(0.1) + Interval(0.2);
  CHECK(oracle::contains(tenth, oracle::exact(0.1) + oracle::exact(0.2)));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), sausage4::DomainError);
  CHECK_THROWS_AS(Interval(1, 2) / Interval(0, 0), sausage4::DomainError);
  CHECK_THROWS_AS(sausage4::sqrt(Interval(-1e-300, 1)), sausage4::DomainError);
  CHECK_THROWS_AS(Interval(std::nan("")), sausage4::DomainError);
  CHECK_THROWS_AS(Interval(2, 1), sausage4::DomainError);
}

TEST_CASE("overflow escapes to infinity on the outer side only") {
  const double big = std::numeric_limits<double>::max();
  const Interval r = Interval(big, big) + Interval(big, big);
  CHECK(r.lo() == big);
  CHECK(std::isinf(r.hi()));
}

TEST_CASE("integers beyond 2^53 are enclosed") {
  const sausage4::Int128 n = (sausage4::Int128(1) << 60) + 1;
  const Interval x = Interval::from_int(n);
  CHECK(x.lo() < x.hi());
  CHECK(oracle::contains(x, mpq_class((1ul << 60) + 1ul)));
  CHECK(Interval::from_int(std::int64_t{12345}).width() == 0);
}

TEST_CASE("powi handles even powers of sign-straddling intervals") {
  const Interval r = sausage4::powi(Interval(-3, 2), 2);
  CHECK(r.lo() == 0);
  CHECK(r.hi() == 9);
  CHECK(sausage4::powi(Interval(-2, -1), 3).contains(Interval(-8, -1)));
  CHECK(sausage4::powi(Interval(5, 7), 0).lo() == 1);
  CHECK(sausage4::powi(Interval(0.0), 4).hi() == 0);
  CHECK(sausage4::powi(Interval(-0.0), 2).hi() == 0);
  CHECK(sausage4::powi(Interval(-2, 0), 2).contains(Interval(0, 4)));
}

TEST_CASE("ceil_conservative") {
  using sausage4::CeilDirection;
  CHECK(sausage4::ceil_conservative(Interval(2.1, 2.9), CeilDirection::lower) == 3);
  CHECK(sausage4::ceil_conservative(Interval(2.1, 3.2), CeilDirection::upper) == 4);
  CHECK(sausage4::ceil_conservative(Interval(5.0, 5.0), CeilDirection::lower) == 5);
  CHECK(sausage4::ceil_conservative(Interval(-2.5, -2.5), CeilDirection::lower) == -2);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(sausage4::ceil_conservative(Interval(1.0, inf), CeilDirection::upper), sausage4::DomainError);
}

TEST_CASE("comparison never resolves overlap") {
  CHECK(sausage4::compare(Interval(1, 2), Interval(3, 4)) == sausage4::Ordering::less);
  CHECK(sausage4::compare(Interval(3, 4), Interval(1, 2)) == sausage4::Ordering::greater);
  CHECK(sausage4::compare(Interval(1, 3), Interval(2, 4)) == sausage4::Ordering::overlap);
  CHECK(sausage4::compare(Interval(1, 2), Interval(2, 3)) == sausage4::Ordering::overlap);
}

TEST_CASE("sub-distributivity: both sides contain the exact value") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 2000; ++i) {
    double v[6];
    for (double& d : v) d = u(rng);
    const Interval x(std::min(v[0], v[1]), std::max(v[0], v[1]));
    const Interval y(std::min(v[2], v[3]), std::max(v[2], v[3]));
    const Interval z(std::min(v[4], v[5]), std::max(v[4], v[5]));
    const Interval left = x * (y + z);
    const Interval right = x * y + x * z;
    REQUIRE(left.intersects(right));
    const mpq_class a = oracle::exact(x.lo()), b = oracle::exact(y.hi()), c = oracle::exact(z.lo());
    const mpq_class exact_value = a * (b + c);
    CHECK(oracle::contains(left, exact_value));
    CHECK(oracle::contains(right, exact_value));
  }
}

TEST_CASE("randomized containment against exact rationals") {
  oracle::KernelFuzz fuzz(20240601);
  const oracle::FuzzResult r = fuzz.run(20000);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
  CHECK(r.checks > 100000);
}

TEST_CASE("stress factor widens results and is restored") {
  const Interval base = Interval(1.0) / Interval(3.0);
  {
    sausage4::ScopedStress stress(1e6);
    const Interval wide = Interval(1.0) / Interval(3.0);
    CHECK(wide.contains(base));
    CHECK(wide.width() > 1e5 * base.width());
  }
  CHECK(sausage4::stress_factor() == 0.0);
  CHECK_THROWS_AS(sausage4::set_stress_factor(-1.0), sausage4::UsageError);
}
