#pragma once

#include <array>
#include <string_view>

#include "sausage4/interval.hpp"

namespace sausage4 {

enum class ConstantId {
  sqrt2,
  sqrt3,
  pi,
  pi_sq,
  acos_one_third,
  atan_silver,  // arctan(3 - 2*sqrt(2))
  kappa2,       // area of the unit disc
  kappa3,       // volume of the unit 3-ball
  kappa4,       // volume of the unit 4-ball
};

struct ConstantEntry {
  ConstantId id;
  std::string_view name;
  Interval value;
};

inline constexpr std::size_t kConstantCount = 9;

const std::array<ConstantEntry, kConstantCount>& constant_table();
const Interval& constant(ConstantId id);
/// Throws UsageError for an unknown name.
const Interval& constant(std::string_view name);

}  // namespace sausage4
