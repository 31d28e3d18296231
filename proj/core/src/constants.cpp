#include "sausage4/constants.hpp"

#include <string>

#include "sausage4/errors.hpp"

namespace sausage4 {

// Endpoints are the downward and upward roundings of 256-bit values; each
// enclosure is one ulp wide.  The test suite re-derives every one of them
// from rational series with explicit remainder bounds.
const std::array<ConstantEntry, kConstantCount>& constant_table() {
  static const std::array<ConstantEntry, kConstantCount> table = {{
      {ConstantId::sqrt2, "sqrt2", Interval(0x1.6a09e667f3bccp+0, 0x1.6a09e667f3bcdp+0)},
      {ConstantId::sqrt3, "sqrt3", Interval(0x1.bb67ae8584caap+0, 0x1.bb67ae8584cabp+0)},
      {ConstantId::pi, "pi", Interval(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1)},
      {ConstantId::pi_sq, "pi_sq", Interval(0x1.3bd3cc9be45dep+3, 0x1.3bd3cc9be45dfp+3)},
      {ConstantId::acos_one_third, "acos_one_third", Interval(0x1.3b2028082e8d3p+0, 0x1.3b2028082e8d4p+0)},
      {ConstantId::atan_silver, "atan_silver", Interval(0x1.5bfe34f051112p-3, 0x1.5bfe34f051113p-3)},
      {ConstantId::kappa2, "kappa2", Interval(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1)},
      {ConstantId::kappa3, "kappa3", Interval(0x1.0c152382d7365p+2, 0x1.0c152382d7366p+2)},
      {ConstantId::kappa4, "kappa4", Interval(0x1.3bd3cc9be45dep+2, 0x1.3bd3cc9be45dfp+2)},
  }};
  return table;
}

const Interval& constant(ConstantId id) {
  for (const auto& e : constant_table())
    if (e.id == id) return e.value;
  throw InternalError("constant id missing from table");
}

const Interval& constant(std::string_view name) {
  for (const auto& e : constant_table())
    if (e.name == name) return e.value;
  throw UsageError("unknown constant '" + std::string(name) + "'");
}

}  // namespace sausage4
