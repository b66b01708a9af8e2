#include "cubforge/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cubforge/digest.hpp"

namespace cubforge {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string file_digest_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return fnv1a64_hex(buf.str());
}

json RunManifest::to_json() const {
  json inputs_json = json::object();
  for (const auto& [name, digest] : input_digests) inputs_json[name] = digest;
  json j{{"command", command},
         {"inputs", inputs_json},
         {"seed", seed},
         {"threads_requested", threads_requested},
         {"version", version}};
  if (wall_clock_ms >= 0) j["wall_clock_ms"] = wall_clock_ms;
  return j;
}

json make_report(const RunManifest& manifest, json result) {
  return json{{"manifest", manifest.to_json()}, {"result", std::move(result)}};
}

}  // namespace cubforge
