#pragma once

// Run manifests embedded into every JSON report.  Wall clock is opt-in so
// that default reports are byte-identical across runs and worker counts.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cubforge {

constexpr const char* kVersion = "0.1.0";

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> input_digests;  // name -> hex
  std::uint64_t seed = 0;
  int threads_requested = 0;
  std::string version = kVersion;
  long long wall_clock_ms = -1;  // emitted only when >= 0

  nlohmann::json to_json() const;
};

nlohmann::json make_report(const RunManifest& manifest, nlohmann::json result);

}  // namespace cubforge
