#pragma once

#include "stein/errors.hpp"
#include "stein/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stein::text {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

// Splits into lines of whitespace-separated tokens, dropping '#' comments and blank lines.
inline std::vector<Line> tokenize(std::string_view src) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t end = src.find('\n', pos);
        if (end == std::string_view::npos) end = src.size();
        std::string_view raw = src.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t k = 0;
        while (k < raw.size()) {
            while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t' || raw[k] == '\r')) ++k;
            std::size_t start = k;
            while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t' && raw[k] != '\r') ++k;
            if (k > start) line.tokens.push_back({std::string(raw.substr(start, k - start)), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == src.size()) break;
        pos = end + 1;
    }
    return lines;
}

inline long long parse_int(const Line& line, const Token& t, long long lo, long long hi) {
    const std::string& s = t.text;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw ParseError(line.number, t.column, "expected an integer, got '" + s + "'");
    long long v = 0;
    for (std::size_t i = k; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError(line.number, t.column, "expected an integer, got '" + s + "'");
        if (v > 1000000000000LL) throw ParseError(line.number, t.column, "integer too large");
        v = v * 10 + (s[i] - '0');
    }
    if (s[0] == '-') v = -v;
    if (v < lo || v > hi)
        throw ParseError(line.number, t.column,
                         "value " + s + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

inline ExtRational parse_rational(const Line& line, const Token& t) {
    try {
        return ExtRational::parse(t.text);
    } catch (const std::exception&) {
        throw ParseError(line.number, t.column, "expected a rational p/q, p or inf, got '" + t.text + "'");
    }
}

inline void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n)
        throw ParseError(line.number, line.tokens.front().column,
                         "'" + line.tokens.front().text + "' takes " + std::to_string(n - 1) + " argument(s)");
}

}  // namespace stein::text
