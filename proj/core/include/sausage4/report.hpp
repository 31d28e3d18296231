#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sausage4/coverage.hpp"
#include "sausage4/interval.hpp"

namespace sausage4 {

enum class Verdict { certified, refuted, inconclusive };
const char* to_string(Verdict v);

/// The weaker of two verdicts: refuted beats inconclusive beats certified.
Verdict combine(Verdict a, Verdict b);

using FactValue = std::variant<bool, std::int64_t, double, std::string, Interval>;

struct Fact {
  std::string key;
  FactValue value;
};

struct VerificationReport {
  std::string claim;
  Verdict verdict = Verdict::inconclusive;
  std::vector<Fact> witness;
  std::optional<std::int64_t> bound;
  std::vector<Range> gaps;
  double runtime_ms = 0.0;
  std::vector<Fact> details;
  /// Human-readable reasons for a non-certified verdict.
  std::vector<std::string> problems;

  void fail(Verdict v, std::string why);
};

}  // namespace sausage4
