#pragma once

// Line/token helpers shared by the plain-text readers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bredim/int_matrix.hpp"

namespace bredim::text {

struct Line {
    std::size_t number; // 1-based
    std::string content;
};

/// Splits into lines, strips '#'-comments (when strip_comments) and surrounding
/// whitespace, and drops lines that end up empty.
std::vector<Line> significant_lines(std::string_view text, bool strip_comments = true);

std::vector<std::string> tokens(std::string_view line);

std::size_t parse_count(const std::string& token, std::size_t line);
Integer parse_integer(const std::string& token, std::size_t line);

} // namespace bredim::text
