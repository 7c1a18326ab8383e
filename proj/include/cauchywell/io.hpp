#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cauchywell::io {

/// Locale-independent shortest-roundtrip-safe text: %.17g semantics.
std::string format_double(double v, int significant_digits = 17);

/// Fixed-point text with `decimals` digits after '.', for table columns.
std::string format_fixed(double v, int decimals);

/// Locale-independent parse of a full field; throws std::invalid_argument.
double parse_double(std::string_view text);
long long parse_integer(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

}  // namespace cauchywell::io
