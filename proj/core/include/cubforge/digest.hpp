#pragma once

// FNV-1a 64-bit digests, used to fingerprint inputs in reports/checkpoints.

#include <cstdint>
#include <string>
#include <string_view>

namespace cubforge {

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
// Digest of a file's contents; throws when unreadable.
std::string file_digest_hex(const std::string& path);

}  // namespace cubforge
