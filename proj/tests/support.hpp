#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braille/braille.hpp"

namespace testing_support {

using braille::Word;

inline const std::string kTablePath = BRAILLE_TEST_TABLE;
inline const std::string kDictPath = BRAILLE_TEST_DICT;
inline const std::string kCorpusDir = BRAILLE_TEST_CORPUS;

inline const braille::CodeTable& table()
{
    static const auto t = braille::CodeTable::load(kTablePath);
    return t;
}

inline const braille::Lexicon& full_lexicon()
{
    static const auto lex = braille::build_lexicon(braille::load_frequency_list(kDictPath));
    return lex;
}

inline braille::Lexicon small_lexicon(const std::vector<std::pair<std::string, std::uint64_t>>& words)
{
    std::vector<braille::RawEntry> entries;
    for (const auto& [w, f] : words) {
        entries.push_back({braille::utf8::decode(w), f});
    }
    return braille::build_lexicon(entries);
}

inline Word w(const char* s)
{
    return braille::utf8::decode(s);
}

/// Dot strings read straight from the table file, without the library
/// parser: character -> "100000" style string in dot order 1..6.
inline const std::map<char32_t, std::string>& oracle_dots()
{
    static const auto dots = [] {
        std::map<char32_t, std::string> m;
        std::ifstream in(kTablePath);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            const auto tab = line.find('\t');
            const std::string key = line.substr(0, tab);
            const char32_t c = key == "SPACE" ? U' ' : braille::utf8::decode(key).at(0);
            m[c] = line.substr(tab + 1, 6);
        }
        return m;
    }();
    return dots;
}

inline std::string oracle_bits(const Word& word)
{
    std::string bits;
    for (char32_t c : word) {
        bits += oracle_dots().at(c == U'`' ? U'\'' : c);
    }
    return bits;
}

inline std::size_t oracle_compare(const Word& a, const Word& b)
{
    const auto x = oracle_bits(a);
    const auto y = oracle_bits(b);
    std::size_t diff = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        diff += x[i] != y[i] ? 1 : 0;
    }
    return diff;
}

/// Edit distance straight from the recursive definition, memoized on the
/// remaining suffix lengths.
class RecursiveEditDistance {
public:
    std::size_t operator()(const Word& a, const Word& b)
    {
        a_ = &a;
        b_ = &b;
        memo_.assign((a.size() + 1) * (b.size() + 1), kUnknown);
        return solve(a.size(), b.size());
    }

private:
    static constexpr std::size_t kUnknown = ~std::size_t{0};

    std::size_t solve(std::size_t i, std::size_t j)
    {
        if (i == 0) {
            return j;
        }
        if (j == 0) {
            return i;
        }
        auto& slot = memo_[i * (b_->size() + 1) + j];
        if (slot != kUnknown) {
            return slot;
        }
        const std::size_t sub = solve(i - 1, j - 1) + ((*a_)[i - 1] == (*b_)[j - 1] ? 0 : 1);
        slot = std::min({sub, solve(i - 1, j) + 1, solve(i, j - 1) + 1});
        return slot;
    }

    const Word* a_ = nullptr;
    const Word* b_ = nullptr;
    std::vector<std::size_t> memo_;
};

/// All words over `alphabet` of length 0..max_len.
inline std::vector<Word> all_strings(const Word& alphabet, std::size_t max_len)
{
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (char32_t c : alphabet) {
                out.push_back(out[i] + c);
            }
        }
        begin = end;
    }
    return out;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace testing_support
