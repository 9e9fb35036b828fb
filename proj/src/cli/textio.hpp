#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace repsim::cli {

// Locale-independent numeric rendering. Doubles use 17 significant digits,
// which round-trips every binary64 value exactly.
std::string format_double(double value);
// Shorter rendering for plot coordinates.
std::string format_double_prec(double value, int precision);
std::string format_u64(std::uint64_t value);

// Locale-independent parsing; the full string must be consumed.
double parse_double(std::string_view text, bool& ok);
std::uint64_t parse_u64(std::string_view text, bool& ok);

std::string_view trim(std::string_view text);

} // namespace repsim::cli
