#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace clusterlag {

// Shortest-faithful decimal rendering of a double (round-trips bit-exactly).
std::string format_double(double v);

// Quotes a CSV field only when it needs it.
std::string csv_quote(const std::string& field);

// FNV-1a 64-bit, used for the output bundle checksum manifest.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::string file_checksum_hex(const std::string& path);

} // namespace clusterlag
