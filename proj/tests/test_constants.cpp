#include "doctest.h"
#include "mpfr_reference.hpp"
#include "sausage4/constants.hpp"
#include "sausage4/errors.hpp"
#include "series_oracle.hpp"

using sausage4::ConstantId;
using sausage4::constant;

TEST_CASE("every constant agrees with the series oracle") {
  for (const auto& e : sausage4::constant_table()) {
    CAPTURE(e.name);
    if (e.id == ConstantId::acos_one_third) {
      CHECK(oracle::acos_one_third_bracketed(e.value));
    } else {
      CHECK(oracle::encloses(e.value, oracle::reference(e.id)));
    }
    CHECK(oracle::width_in_ulps(e.value) <= 4.0);
    CHECK(e.value.lo() < e.value.hi());
  }
}

TEST_CASE("pi contains its familiar digits and sin vanishes on it") {
  const auto& pi = constant("pi");
  CHECK(pi.contains(3.141592653589793));
  CHECK_FALSE(pi.contains(3.14159265358979));
  const oracle::QInterval s_lo = oracle::sin_series(oracle::exact(pi.lo()));
  const oracle::QInterval s_hi = oracle::sin_series(oracle::exact(pi.hi()));
  CHECK(s_lo.lo > 0);
  CHECK(s_hi.hi < 0);
}

TEST_CASE("cos of the acos enclosure contains one third") {
  CHECK(oracle::acos_one_third_bracketed(constant(ConstantId::acos_one_third)));
}

TEST_CASE("ball volumes recompute from pi") {
  using sausage4::Interval;
  const Interval& pi = constant(ConstantId::pi);
  CHECK((Interval(4.0) * pi / Interval(3.0)).contains(constant(ConstantId::kappa3)));
  CHECK((constant(ConstantId::pi_sq) / Interval(2.0)).contains(constant(ConstantId::kappa4)));
  CHECK(reference::contains(constant(ConstantId::kappa2), reference::Real::pi()));
}

TEST_CASE("constants against 256-bit values") {
  CHECK(reference::contains(constant(ConstantId::acos_one_third), reference::Real::acos_third()));
  CHECK(reference::contains(constant(ConstantId::atan_silver), reference::Real::atan_silver()));
  CHECK(reference::contains(constant(ConstantId::sqrt3), reference::Real::sqrt_of(3)));
}

TEST_CASE("lookup by name") {
  CHECK(&constant("atan_silver") == &constant(ConstantId::atan_silver));
  CHECK_THROWS_AS(constant("euler"), sausage4::UsageError);
}
