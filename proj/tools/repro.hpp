#pragma once

// The nine reproduction checks behind `repro all` and the acceptance tests.
// Each runs standalone and reports pass/fail with a JSON detail blob.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cubforge {

// Seed of the Monte Carlo criterion; fixed so reports are reproducible.
constexpr std::uint64_t kReproSeed = 271828;

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  nlohmann::json details;
};

constexpr int kCriterionCount = 9;
const char* criterion_name(int number);  // 1-based
CriterionResult run_criterion(int number, int threads = 0);
// Runs 1..9 in order; `progress` fires after each.
std::vector<CriterionResult> run_all_criteria(
    int threads = 0, const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace cubforge
