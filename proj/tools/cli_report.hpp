#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sausage4/covering_search.hpp"

namespace sausage4::cli {

struct RunConfig {
  std::string command;  // verify | emit | oracle
  std::string target;   // n4 | N4 | tail, or a dataset name
  std::optional<std::int64_t> m;
  std::optional<std::array<std::int64_t, 3>> h;
  std::optional<Range> m_range;
  std::optional<std::int64_t> h_max;
  std::optional<Range> n_range;
  CoverageMode mode = CoverageMode::shrunken;
  std::string out;  // empty means stdout
  unsigned workers = 1;
  double stress = 0.0;
  std::int64_t chain_to = 200;
};

/// "A..B" with A <= B; UsageError otherwise.
Range parse_range(std::string_view text);
/// "a,b,c" of nonnegative integers.
std::array<std::int64_t, 3> parse_triple(std::string_view text);
CoverageMode parse_mode(std::string_view text);

nlohmann::ordered_json to_json(const Interval& x);
nlohmann::ordered_json to_json(const VerificationReport& report);

/// 0 certified, 2 inconclusive, 1 refuted.
int exit_code(Verdict v);

int cmd_verify(const RunConfig& config, std::ostream& log);
int cmd_emit(const RunConfig& config, std::ostream& log);
int cmd_oracle(const RunConfig& config, std::ostream& out);

void write_density_scan(std::ostream& os, const RunConfig& config);
void write_coverage_triangles(std::ostream& os, const RunConfig& config);
void write_sausage_curve(std::ostream& os, const RunConfig& config);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sausage4::cli
