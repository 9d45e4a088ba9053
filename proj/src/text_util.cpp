#include "text_util.hpp"

#include <charconv>
#include <sstream>

#include "bredim/errors.hpp"

namespace bredim::text {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

std::vector<Line> significant_lines(std::string_view text, bool strip_comments) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++number;
        if (strip_comments) {
            const auto hash = raw.find('#');
            if (hash != std::string_view::npos)
                raw = raw.substr(0, hash);
        }
        raw = trim(raw);
        if (!raw.empty())
            out.push_back({number, std::string(raw)});
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    return out;
}

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    return value;
}

Integer parse_integer(const std::string& token, std::size_t line) {
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError(line, "expected an integer, got '" + token + "'");
    Integer value;
    value.set_str(token.front() == '+' ? token.substr(1) : token, 10);
    return value;
}

} // namespace bredim::text
