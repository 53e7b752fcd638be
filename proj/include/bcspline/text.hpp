#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bcspline {

// Small string helpers shared by the serializers.

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

/// Parses "2,-1" style lists. Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(std::string_view s);
std::string join_ints(const std::vector<int>& values, std::string_view sep);

}  // namespace bcspline
