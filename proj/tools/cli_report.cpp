#include "cli_report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>
#include <type_traits>
#include <variant>

#include "CLI11.hpp"
#include "sausage4/constants.hpp"
#include "sausage4/errors.hpp"

namespace sausage4::cli {
namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  return v;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string hex(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

nlohmann::ordered_json fact_value(const FactValue& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Interval>) return to_json(x);
        else return x;
      },
      v);
}

nlohmann::ordered_json facts(const std::vector<Fact>& list) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& f : list) j[f.key] = fact_value(f.value);
  return j;
}

// Writes to --out when given, else to the fallback stream.
template <typename Fn>
void with_output(const RunConfig& config, std::ostream& fallback, Fn&& fn) {
  if (config.out.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IOError("cannot open '" + config.out + "' for writing");
  fn(file);
  file.flush();
  if (!file) throw IOError("write to '" + config.out + "' failed");
}

Range m_span(const RunConfig& config, std::int64_t default_m) {
  if (config.m_range) return *config.m_range;
  const std::int64_t m = config.m.value_or(default_m);
  return {m, m};
}

void require_positive_m(const Range& r) {
  if (r.lo < 1) throw UsageError("m must be positive");
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw UsageError("range must look like A..B, got '" + std::string(text) + "'");
  const Range r{parse_int(text.substr(0, dots), "range start"), parse_int(text.substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

std::array<std::int64_t, 3> parse_triple(std::string_view text) {
  std::array<std::int64_t, 3> h{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos))
      throw UsageError("h must look like a,b,c, got '" + std::string(text) + "'");
    h[i] = parse_int(text.substr(start, i < 2 ? comma - start : std::string_view::npos), "h entry");
    if (h[i] < 0) throw UsageError("h entries must be nonnegative");
    start = comma + 1;
  }
  return h;
}

CoverageMode parse_mode(std::string_view text) {
  if (text == "shrunken") return CoverageMode::shrunken;
  if (text == "inflated") return CoverageMode::inflated;
  throw UsageError("mode must be shrunken or inflated, got '" + std::string(text) + "'");
}

nlohmann::ordered_json to_json(const Interval& x) { return {{"lo", x.lo()}, {"hi", x.hi()}}; }

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["claim"] = report.claim;
  j["verdict"] = to_string(report.verdict);
  j["witness"] = facts(report.witness);
  j["bound"] = report.bound ? nlohmann::ordered_json(*report.bound) : nlohmann::ordered_json(nullptr);
  j["gaps"] = nlohmann::ordered_json::array();
  for (const auto& g : report.gaps) j["gaps"].push_back({g.lo, g.hi});
  j["runtime_ms"] = report.runtime_ms;
  nlohmann::ordered_json constants = nlohmann::ordered_json::object();
  for (const auto& e : constant_table())
    constants[std::string(e.name)] = {{"lo", hex(e.value.lo())}, {"hi", hex(e.value.hi())}};
  j["constants"] = constants;
  j["kernel"] = {{"rounding", "round-to-nearest with error-free residual, one-ulp outward correction"},
                 {"stress_factor", stress_factor()}};
  j["details"] = facts(report.details);
  j["problems"] = report.problems;
  return j;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::certified: return 0;
    case Verdict::inconclusive: return 2;
    case Verdict::refuted: return 1;
  }
  return 1;
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  ScopedStress stress(config.stress);
  TheoremOptions options;
  options.search.workers = config.workers;
  options.tail.chain_to = config.chain_to;
  if (config.m) options.scan_m = *config.m;
  options.h_max = config.h_max.value_or(std::min<std::int64_t>(8, max_layers(options.scan_m)));
  if (config.m_range) {
    require_positive_m(*config.m_range);
    options.cover_from = config.m_range->lo;
    options.cover_to = config.m_range->hi;
  }

  VerificationReport report;
  if (config.target == "n4") report = verify_small_threshold(options);
  else if (config.target == "N4") report = verify_large_threshold(options);
  else if (config.target == "tail") report = tail_check(options.tail);
  else throw UsageError("verify target must be n4, N4 or tail, got '" + config.target + "'");

  const auto doc = to_json(report);
  with_output(config, log, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  if (!config.out.empty()) {
    log << report.claim << ": " << to_string(report.verdict);
    if (report.bound) log << " bound=" << *report.bound;
    log << " (report written to " << config.out << ")\n";
  }
  return exit_code(report.verdict);
}

void write_density_scan(std::ostream& os, const RunConfig& config) {
  const Range ms = m_span(config, 17);
  require_positive_m(ms);
  os << "m,h1,h16,h17,G,vol_lo,vol_hi,density_lo,density_hi,sausage_density_mid,denser_flag\n";
  for (std::int64_t m = ms.lo; m <= ms.hi; ++m) {
    const std::int64_t h_max = std::min(config.h_max.value_or(max_layers(m)), max_layers(m));
    const ScanResult s = scan(m, h_max, {config.workers, true});
    for (const auto& row : s.rows) {
      const int flag = row.denser == Verdict3::yes ? 1 : row.denser == Verdict3::no ? 0 : -1;
      os << m << ',' << row.spec.h[0] << ',' << row.spec.h[1] << ',' << row.spec.h[2] << ',' << row.points << ','
         << num(row.hull_volume.lo()) << ',' << num(row.hull_volume.hi()) << ',' << num(row.density.lo()) << ','
         << num(row.density.hi()) << ',' << num(sausage_density(row.points).mid()) << ',' << flag << '\n';
    }
  }
}

void write_coverage_triangles(std::ostream& os, const RunConfig& config) {
  const Range ms = m_span(config, 20);
  require_positive_m(ms);
  const CoverageResult cov = build_coverage(ms.lo, ms.hi, config.mode, {config.workers, true});
  os << "m,h1,h16,h17,vertex_index,N,density\n";
  std::vector<Contribution> ordered = cov.contributions;
  std::sort(ordered.begin(), ordered.end(), [](const Contribution& a, const Contribution& b) {
    return std::tie(a.spec.m, a.spec.h) < std::tie(b.spec.m, b.spec.h);
  });
  for (const auto& c : ordered) {
    const PackingSummary s = summarize(c.spec);
    const std::int64_t low = c.range.lo;
    const std::array<std::pair<std::int64_t, double>, 3> vertices{{{low, sausage_density(low).mid()},
                                                                   {s.points, sausage_density(s.points).mid()},
                                                                   {s.points, s.density.mid()}}};
    for (std::size_t i = 0; i < vertices.size(); ++i)
      os << c.spec.m << ',' << c.spec.h[0] << ',' << c.spec.h[1] << ',' << c.spec.h[2] << ',' << i << ','
         << vertices[i].first << ',' << num(vertices[i].second) << '\n';
  }
}

void write_sausage_curve(std::ostream& os, const RunConfig& config) {
  const Range r = config.n_range.value_or(Range{1, 1000000000});
  if (r.lo < 1) throw UsageError("sausage curve needs n >= 1");
  std::set<std::int64_t> grid;
  for (std::int64_t n = 1; n <= 10; ++n) grid.insert(n);
  constexpr int kPerDecade = 20;
  for (int k = 0; k <= 18 * kPerDecade; ++k) {
    const double v = std::round(std::pow(10.0, static_cast<double>(k) / kPerDecade));
    if (v > 9e18) break;
    grid.insert(static_cast<std::int64_t>(v));
  }
  grid.insert(r.lo);
  grid.insert(r.hi);
  os << "n,density_lo,density_hi\n";
  for (auto n : grid) {
    if (n < r.lo || n > r.hi) continue;
    const Interval d = sausage_density(n);
    os << n << ',' << num(d.lo()) << ',' << num(d.hi()) << '\n';
  }
}

int cmd_emit(const RunConfig& config, std::ostream& log) {
  void (*writer)(std::ostream&, const RunConfig&) = nullptr;
  if (config.target == "density-scan") writer = write_density_scan;
  else if (config.target == "coverage-triangles") writer = write_coverage_triangles;
  else if (config.target == "sausage-curve") writer = write_sausage_curve;
  else throw UsageError("unknown dataset '" + config.target + "'");
  // Render fully before touching the output so a failed run leaves no partial file.
  std::ostringstream buffer;
  writer(buffer, config);
  with_output(config, log, [&](std::ostream& os) { os << buffer.str(); });
  if (!config.out.empty()) log << config.target << " written to " << config.out << '\n';
  return 0;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  if (!config.m) throw UsageError("oracle needs --m");
  const TruncationSpec spec{*config.m, config.h.value_or(std::array<std::int64_t, 3>{0, 0, 0})};
  validate(spec);
  const std::int64_t closed = g_truncated(spec);
  const std::int64_t counted = count_points_oracle(spec, {17, config.workers});
  out << to_string(spec) << '\n';
  out << "oracle      " << counted << '\n';
  out << "closed form " << closed << '\n';
  out << (counted == closed ? "MATCH" : "MISMATCH") << '\n';
  return counted == closed ? 0 : 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified checks of finite sphere packings in four dimensions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string m_range, h_text, n_range, mode = "shrunken";

  // "--h" is taken by the layer triple, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--m", config.m, "24-cell scale");
    sub->add_option("--h", h_text, "layers removed from the three facets, a,b,c");
    sub->add_option("--m-range", m_range, "scale range A..B");
    sub->add_option("--h-max", config.h_max, "largest layer count in scans");
    sub->add_option("--n-range", n_range, "sphere-count range A..B");
    sub->add_option("--mode", mode, "coverage mode: shrunken or inflated");
    sub->add_option("--out", config.out, "output path (default stdout)");
    sub->add_option("--workers", config.workers, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--stress", config.stress, "widen every interval result by this many extra ulps")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--chain-to", config.chain_to, "last scale sampled by the tail chaining check");
  };

  auto* verify = app.add_subcommand("verify", "certify a threshold bound and write a report");
  verify->add_option("target", config.target, "n4, N4 or tail")->required();
  add_common(verify);
  auto* emit = app.add_subcommand("emit", "write figure data as CSV");
  emit->add_option("dataset", config.target, "density-scan, coverage-triangles or sausage-curve")->required();
  add_common(emit);
  auto* oracle = app.add_subcommand("oracle", "compare the enumeration count with the closed form");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (!m_range.empty()) config.m_range = parse_range(m_range);
    if (!h_text.empty()) config.h = parse_triple(h_text);
    if (!n_range.empty()) config.n_range = parse_range(n_range);
    config.mode = parse_mode(mode);
    if (verify->parsed()) return cmd_verify(config, out);
    if (emit->parsed()) return cmd_emit(config, out);
    return cmd_oracle(config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
  } catch (const IOError& e) {
    err << "io error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace sausage4::cli
