#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reachrl {

/// SHA-256 of a byte buffer, as a lowercase hex string.
std::string sha256_hex(const void* data, std::size_t len);

/// SHA-256 of a file's contents.
std::string sha256_file_hex(const std::string& path);

/// FNV-1a 64-bit hash; used for cheap content fingerprints (e.g. observation
/// digests in graph exports), not for integrity.
std::uint64_t fnv1a64(const void* data, std::size_t len);

std::string hex64(std::uint64_t value);

}  // namespace reachrl
