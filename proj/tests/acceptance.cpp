// Acceptance gate: runs the nine reproduction checks in order and prints one
// PASS/FAIL line per check.  Checks 4 and 6 each carry one sub-assertion
// whose quoted target value the computed census contradicts; they are
// expected to FAIL in exactly that way, with every other part of their
// details healthy.  The gate exits nonzero if any check deviates from this
// profile, so a regression anywhere still breaks the build while the two
// honest failures stay visible in the log.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>

#include <json.hpp>

#include "repro.hpp"

using cubforge::CriterionResult;
using cubforge::kCriterionCount;
using cubforge::run_criterion;
using nlohmann::json;

namespace {

// seconds; 0 means no budget is asserted for that check
const double kBudget[kCriterionCount + 1] = {0, 600, 300, 120, 0, 300, 0, 0, 0, 60};

bool family_defect_only(const json& d) {
  return d.at("from_24_vertex_graph").at("match") == true &&
         d.at("from_arithmetic_9_graph").at("match") == true &&
         d.at("family_sizes_20_20_80").at("match") == false &&
         d.at("family_sizes_20_20_80").at("formula") == -25600;
}

bool type2_defect_only(const json& d) {
  return d.at("certificates_ok") == true && d.at("type2_trivial_on_24") == false &&
         d.at("from_24_vertex_graph").at("ok") == true &&
         d.at("from_arithmetic_9_graph").at("ok") == true;
}

}  // namespace

int main() {
  bool gate_ok = true;
  for (int n = 1; n <= kCriterionCount; ++n) {
    bool want_pass = n != 4 && n != 6;
    std::function<bool(const json&)> profile;
    if (n == 4) profile = family_defect_only;
    if (n == 6) profile = type2_defect_only;

    CriterionResult r{n, cubforge::criterion_name(n), false, {}};
    double secs = 0;
    try {
      auto t0 = std::chrono::steady_clock::now();
      r = run_criterion(n);
      secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const std::exception& ex) {
      std::fprintf(stderr, "criterion %d threw: %s\n", n, ex.what());
      gate_ok = false;
    }
    std::printf("%s criterion %d: %s\n", r.pass ? "PASS" : "FAIL", r.number, r.name.c_str());
    std::fflush(stdout);
    std::fprintf(stderr, "  criterion %d took %.1fs\n", n, secs);

    bool as_expected = r.pass == want_pass;
    if (!want_pass && as_expected) {
      try {
        as_expected = profile(r.details);
      } catch (const std::exception&) {
        as_expected = false;
      }
      if (!as_expected)
        std::fprintf(stderr, "criterion %d failed outside the expected sub-assertion:\n%s\n", n,
                     r.details.dump(2).c_str());
    } else if (!as_expected) {
      std::fprintf(stderr, "criterion %d: expected %s, details:\n%s\n", n,
                   want_pass ? "PASS" : "FAIL", r.details.dump(2).c_str());
    }
    if (kBudget[n] > 0 && secs > kBudget[n]) {
      std::fprintf(stderr, "criterion %d exceeded its %.0fs budget\n", n, kBudget[n]);
      as_expected = false;
    }
    gate_ok = gate_ok && as_expected;
  }
  if (!gate_ok) std::fprintf(stderr, "acceptance gate: unexpected outcome, see above\n");
  return gate_ok ? 0 : 1;
}
