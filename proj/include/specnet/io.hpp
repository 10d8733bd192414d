#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace specnet {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD).
Date parse_iso_date(std::string_view text);
std::string format_iso_date(Date d);
/// Calendar days from a to b.
long days_between(Date a, Date b);

/// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view s);

/// Shortest text that parses back to the same double.
std::string format_double(double x);
double parse_double(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
/// Writes to a sibling temporary and renames over the target.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

}  // namespace specnet
