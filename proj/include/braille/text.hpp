#pragma once

#include <string_view>
#include <vector>

#include "braille/utf8.hpp"

namespace braille {

constexpr bool is_letter(char32_t c) noexcept
{
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')
        || (c >= 0xC0 && c <= 0xFF && c != 0xD7 && c != 0xF7);
}

constexpr bool is_word_char(char32_t c) noexcept
{
    return is_letter(c) || c == U'-' || c == U'\'' || c == U'`';
}

constexpr bool is_space(char32_t c) noexcept
{
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' || c == 0xA0;
}

/// Experiment tokenization: lowercase, drop digits, split on whitespace and
/// trim anything but letters, hyphens and apostrophes from both ends.
/// Tokens left empty are dropped.
inline std::vector<Word> tokenize(WordView text)
{
    std::vector<Word> out;
    Word cur;
    auto flush = [&] {
        std::size_t b = 0;
        std::size_t e = cur.size();
        while (b < e && !is_word_char(cur[b])) {
            ++b;
        }
        while (e > b && !is_word_char(cur[e - 1])) {
            --e;
        }
        if (e > b) {
            out.push_back(cur.substr(b, e - b));
        }
        cur.clear();
    };
    for (char32_t c : text) {
        if (is_space(c)) {
            flush();
        } else if (c >= U'0' && c <= U'9') {
            continue;
        } else {
            cur.push_back(to_lower(c));
        }
    }
    flush();
    return out;
}

inline std::vector<Word> tokenize_utf8(std::string_view text)
{
    return tokenize(utf8::decode(text));
}

/// Greedy wrap of tokens into lines of at most `width` characters, words
/// separated by one space. A token longer than `width` gets its own line.
inline std::vector<Word> wrap(const std::vector<Word>& tokens, std::size_t width)
{
    std::vector<Word> lines;
    Word line;
    for (const auto& t : tokens) {
        if (!line.empty() && line.size() + 1 + t.size() > width) {
            lines.push_back(std::move(line));
            line.clear();
        }
        if (!line.empty()) {
            line.push_back(U' ');
        }
        line += t;
    }
    if (!line.empty()) {
        lines.push_back(std::move(line));
    }
    return lines;
}

inline Word join(const std::vector<Word>& tokens, char32_t sep = U' ')
{
    Word out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) {
            out.push_back(sep);
        }
        out += tokens[i];
    }
    return out;
}

} // namespace braille
