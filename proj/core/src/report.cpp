#include "sausage4/report.hpp"

#include <utility>

namespace sausage4 {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "CERTIFIED";
    case Verdict::refuted: return "REFUTED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::refuted || b == Verdict::refuted) return Verdict::refuted;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::certified;
}

void VerificationReport::fail(Verdict v, std::string why) {
  verdict = combine(verdict, v);
  problems.push_back(std::move(why));
}

}  // namespace sausage4
