#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace gramburst {

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes);

// Whole file as bytes; throws IoError.
std::string read_file(const std::string& path);

void write_file(const std::string& path, std::string_view content);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// RFC-4180 style quoting, applied only when the field needs it.
std::string csv_escape(std::string_view field);

// Shortest round-trip decimal form of a double ("250", "333.25", ...).
std::string format_double(double v);

}  // namespace gramburst
