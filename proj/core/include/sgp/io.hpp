#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgp {

std::string read_file(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);

// Write via a temporary file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

std::vector<std::string> split_on(const std::string& line, char sep);

// FNV-1a 64-bit digest, hex-encoded. Used for input provenance in manifests,
// not for security.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);
std::string file_digest_hex(const std::string& path);

// Round-trip-exact decimal rendering of a double ("%.17g").
std::string format_double(double v);

}  // namespace sgp
