#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stlf {

/// Shortest decimal form that round-trips the exact double. All CSV artifacts
/// use this so re-parsing reproduces identical values and repeated runs emit
/// identical bytes.
std::string fmt_double(double v);

/// Strict full-string parses; nullopt on any trailing garbage, empty field,
/// or (for doubles) non-finite value.
std::optional<double> parse_double(std::string_view field);
std::optional<std::int64_t> parse_int(std::string_view field);
std::optional<std::uint64_t> parse_uint(std::string_view field);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view line, char sep);
/// Splits on runs of spaces/tabs.
std::vector<std::string_view> split_ws(std::string_view line);

std::string read_text_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit; used for artifact hashes in run manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace stlf
