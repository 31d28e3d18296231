#include "sausage4/covering_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "sausage4/constants.hpp"
#include "sausage4/errors.hpp"

namespace sausage4 {
namespace {

// Three-way outcome of a certified comparison "lhs > rhs".
Verdict decide_greater(const Interval& lhs, const Interval& rhs) {
  switch (compare(lhs, rhs)) {
    case Ordering::greater: return Verdict::certified;
    case Ordering::less: return Verdict::refuted;
    case Ordering::overlap: return Verdict::inconclusive;
  }
  return Verdict::inconclusive;
}

}  // namespace

Interval evaluate(const Interval* coefficients, std::size_t count, const Interval& x) {
  Interval acc(0.0);
  for (std::size_t i = count; i-- > 0;) acc = acc * x + coefficients[i];
  return acc;
}

TailPolynomials tail_polynomials() {
  TailPolynomials t;

  // G(Y_y) = 4y^4 + 8y^3 + 8y^2 + 4y + 1, shifted to y = x - 1, plus one.
  std::array<Int128, 5> p{1, 4, 8, 8, 4};
  for (int k = 0; k < 4; ++k)
    for (int i = 3; i >= k; --i) p[i] -= p[i + 1];
  p[0] += 1;
  for (int i = 0; i < 5; ++i) t.numerator[i] = Interval::from_int(p[i]);

  const Interval& pi = constant(ConstantId::pi);
  t.denominator[4] = Interval(32.0);
  t.denominator[3] = Interval(64.0) * constant(ConstantId::sqrt2);
  t.denominator[2] = Interval(16.0) * constant(ConstantId::sqrt3) * pi;
  t.denominator[1] = Interval(192.0) * constant(ConstantId::acos_one_third) - Interval(64.0) * pi;
  t.denominator[0] = constant(ConstantId::kappa4);

  std::array<Interval, 4> dp, dq;
  for (int i = 1; i < 5; ++i) {
    dp[i - 1] = t.numerator[i] * Interval(static_cast<double>(i));
    dq[i - 1] = t.denominator[i] * Interval(static_cast<double>(i));
  }
  for (auto& c : t.g) c = Interval(0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) {
      t.g[i + j] += dp[i] * t.denominator[j];
      t.g[i + j] -= t.numerator[j] * dq[i];
    }
  return t;
}

TailCertificate certify_tail(const TailOptions& options) {
  if (options.endpoint_m < options.monotone_from)
    throw UsageError("tail endpoint must not precede the start of monotonicity");
  if (options.chain_to <= options.endpoint_m) throw UsageError("chain_to must exceed the tail endpoint");

  TailCertificate c;
  c.poly = tail_polynomials();
  Verdict v = Verdict::certified;
  auto note = [&](Verdict outcome, bool& flag, const std::string& what) {
    flag = outcome == Verdict::certified;
    if (!flag) {
      v = combine(v, outcome);
      c.problems.push_back(what + " (" + to_string(outcome) + ")");
    }
  };

  const auto& g = c.poly.g;
  const Interval expected_leading = Interval(256.0) * (constant(ConstantId::sqrt2) + Interval(1.0));
  note(g[6].intersects(expected_leading) ? Verdict::certified : Verdict::refuted, c.leading_ok,
       "leading coefficient of g " + g[6].to_string());
  note(g[7].lo() == 0 && g[7].hi() == 0 ? Verdict::certified : Verdict::inconclusive, c.top_vanishes,
       "degree-7 coefficient of g is not exactly zero");

  Verdict coeff = Verdict::certified;
  for (int i = 0; i <= 5; ++i) {
    const double mag = std::max(std::fabs(g[i].lo()), std::fabs(g[i].hi()));
    const double inner = g[i].contains_zero() ? 0.0 : std::min(std::fabs(g[i].lo()), std::fabs(g[i].hi()));
    if (mag < options.coefficient_bound) continue;
    coeff = combine(coeff, inner >= options.coefficient_bound ? Verdict::refuted : Verdict::inconclusive);
  }
  note(coeff, c.coefficients_ok, "lower coefficients of g below " + std::to_string(options.coefficient_bound));

  // With |a_i| < B for i <= 5 and a_7 = 0, g(x) >= a_6 x^6 - B(x^5 + ... + 1),
  // and (x^5 + ... + 1)/x^6 decreases, so positivity at x0 extends to x >= x0.
  const Interval x0 = Interval::from_int(options.monotone_from);
  Interval tail_sum(0.0);
  for (unsigned k = 0; k <= 5; ++k) tail_sum += powi(x0, k);
  note(c.top_vanishes && c.coefficients_ok ? decide_greater(g[6] * powi(x0, 6), Interval(options.coefficient_bound) * tail_sum)
                                           : Verdict::inconclusive,
       c.positivity_ok, "positivity of g from x=" + std::to_string(options.monotone_from));

  const PackingSummary end = summarize({options.endpoint_m, {0, 0, 0}});
  c.endpoint_points = end.points;
  c.endpoint_first = end.points - end.r_lo;
  const auto flips = flip_checks(end, end.r_lo);
  c.at = flips[0];
  c.below = flips[1];
  const Verdict at_ok = decide_greater(c.at.approx, c.at.sausage);
  const Verdict below_ok = decide_greater(c.below.sausage, c.below.approx);
  note(combine(end.denser == Verdict3::yes ? Verdict::certified : Verdict::inconclusive, combine(at_ok, below_ok)),
       c.endpoint_ok, "density flip of Y_" + std::to_string(options.endpoint_m));

  // min L(Y_{m+1}) <= G(Y_m) + 1 for the sampled scales.
  Verdict chain = Verdict::certified;
  c.chained_to = options.endpoint_m;
  std::int64_t previous = end.points;
  for (std::int64_t m = options.endpoint_m + 1; m <= options.chain_to; ++m) {
    const PackingSummary s = summarize({m, {0, 0, 0}});
    const Verdict step = decide_greater(approx_density(s, previous + 1), sausage_density(previous + 1));
    if (step != Verdict::certified) {
      chain = step;
      break;
    }
    c.chained_to = m;
    previous = s.points;
  }
  note(chain, c.chaining_ok, "chaining beyond Y_" + std::to_string(c.chained_to));

  // The approximate density of Y_x at G(Y_{x-1}) + 1 points increases for
  // x >= monotone_from while the sausage density at that count decreases,
  // so one certified step at x = endpoint + 1 covers every later x.
  const PackingSummary next = summarize({options.endpoint_m + 1, {0, 0, 0}});
  note(c.positivity_ok ? decide_greater(approx_density(next, end.points + 1), sausage_density(end.points + 1))
                       : Verdict::inconclusive,
       c.extension_ok, "monotone extension from Y_" + std::to_string(options.endpoint_m + 1));

  c.verdict = v;
  return c;
}

VerificationReport tail_check(const TailOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const TailCertificate c = certify_tail(options);
  VerificationReport rep;
  rep.claim = "tail";
  rep.verdict = c.verdict;
  rep.problems = c.problems;
  rep.bound = c.endpoint_first;
  rep.witness = {{"endpoint_m", options.endpoint_m},
                 {"endpoint_points", c.endpoint_points},
                 {"endpoint_first", c.endpoint_first},
                 {"density_below", c.below.approx},
                 {"sausage_below", c.below.sausage},
                 {"density_at", c.at.approx},
                 {"sausage_at", c.at.sausage}};
  for (std::size_t i = 0; i < c.poly.g.size(); ++i) rep.details.push_back({"g_" + std::to_string(i), c.poly.g[i]});
  rep.details.push_back({"leading_ok", c.leading_ok});
  rep.details.push_back({"coefficients_ok", c.coefficients_ok});
  rep.details.push_back({"positivity_ok", c.positivity_ok});
  rep.details.push_back({"endpoint_ok", c.endpoint_ok});
  rep.details.push_back({"chaining_ok", c.chaining_ok});
  rep.details.push_back({"chained_to", c.chained_to});
  rep.details.push_back({"extension_ok", c.extension_ok});
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace sausage4
