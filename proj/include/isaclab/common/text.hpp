#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isaclab {

/// Shortest decimal form of `v` that parses back to exactly `v`.
std::string format_double(double v);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Lowercased alphanumeric token runs; everything else is a separator.
std::vector<std::string> tokenize_alnum(std::string_view text);

/// FNV-1a 64-bit over raw bytes, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace isaclab
