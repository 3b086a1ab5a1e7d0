#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braille/code_table.hpp"
#include "braille/errors.hpp"
#include "braille/utf8.hpp"

namespace braille {

struct RawEntry {
    Word word;
    std::uint64_t frequency = 0;

    friend bool operator==(const RawEntry&, const RawEntry&) = default;
};

using CharSet = std::set<char32_t>;

// Lowercase letters, the Portuguese accented letters, hyphen and both
// apostrophe forms.
inline CharSet portuguese_allowed_chars()
{
    CharSet s;
    for (char32_t c = U'a'; c <= U'z'; ++c) {
        s.insert(c);
    }
    for (char32_t c : U"áàâãéêíóôõúç-'`") {
        if (c != 0) {
            s.insert(c);
        }
    }
    return s;
}

inline CharSet char_set_from(WordView chars)
{
    return CharSet(chars.begin(), chars.end());
}

/// Parses a `word count` per line frequency list. Blank lines are skipped;
/// a repeated word keeps its first frequency.
inline std::vector<RawEntry> load_frequency_list(std::istream& in)
{
    std::vector<RawEntry> out;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto sp = line.find(' ');
        if (sp == std::string::npos || sp == 0) {
            throw MalformedLine(lineno);
        }
        std::string_view word(line.data(), sp);
        std::string_view count(line.data() + sp + 1, line.size() - sp - 1);
        if (count.empty() || count.find(' ') != std::string_view::npos) {
            throw MalformedLine(lineno);
        }
        std::uint64_t freq = 0;
        auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), freq);
        if (ec != std::errc{} || ptr != count.data() + count.size()) {
            throw NonNumericFrequency(lineno);
        }
        if (!seen.emplace(word).second) {
            continue;
        }
        Word w;
        try {
            w = utf8::decode(word);
        } catch (const Utf8Error&) {
            throw MalformedLine(lineno);
        }
        out.push_back({std::move(w), freq});
    }
    return out;
}

inline std::vector<RawEntry> load_frequency_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw BrailleError("cannot open frequency list '" + path + "'");
    }
    return load_frequency_list(in);
}

/// Filtered, deduplicated word list bucketed by length. Buckets are ordered
/// by descending frequency with ties broken lexicographically.
class Lexicon {
public:
    struct BuildStats {
        std::size_t input = 0;
        std::size_t rejected = 0;   // contained a disallowed character
        std::size_t duplicates = 0; // collided after lowercasing
    };

    Lexicon() = default;

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const CharSet& allowed_chars() const noexcept { return allowed_; }
    const BuildStats& stats() const noexcept { return stats_; }
    std::size_t max_length() const noexcept { return buckets_.empty() ? 0 : buckets_.size() - 1; }

    const std::vector<Word>& words_of_length(std::size_t n) const
    {
        static const std::vector<Word> none;
        return n < buckets_.size() ? buckets_[n] : none;
    }

    std::optional<std::uint64_t> contains(WordView word) const
    {
        Word key = to_lower(word);
        for (auto& c : key) {
            c = normalize_char(c);
        }
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::uint64_t frequency(WordView word) const { return contains(word).value_or(0); }

    // Every word, bucket by bucket in ascending length.
    std::vector<Word> words() const
    {
        std::vector<Word> out;
        out.reserve(size());
        for (const auto& b : buckets_) {
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    }

    std::vector<RawEntry> raw_entries() const
    {
        std::vector<RawEntry> out;
        out.reserve(size());
        for (const auto& b : buckets_) {
            for (const auto& w : b) {
                out.push_back({w, entries_.at(w)});
            }
        }
        return out;
    }

private:
    friend Lexicon build_lexicon(const std::vector<RawEntry>&, const CharSet&);

    std::unordered_map<Word, std::uint64_t> entries_;
    std::vector<std::vector<Word>> buckets_;
    CharSet allowed_;
    BuildStats stats_;
};

inline Lexicon build_lexicon(const std::vector<RawEntry>& entries, const CharSet& allowed)
{
    Lexicon lex;
    lex.allowed_ = allowed;
    lex.stats_.input = entries.size();
    std::vector<std::vector<std::pair<std::uint64_t, Word>>> staged;
    for (const auto& e : entries) {
        if (e.word.empty()) {
            ++lex.stats_.rejected;
            continue;
        }
        Word w = to_lower(e.word);
        bool ok = true;
        for (auto& c : w) {
            if (!allowed.count(c)) {
                ok = false;
                break;
            }
            c = normalize_char(c);
        }
        if (!ok) {
            ++lex.stats_.rejected;
            continue;
        }
        if (!lex.entries_.emplace(w, e.frequency).second) {
            ++lex.stats_.duplicates;
            continue;
        }
        if (staged.size() <= w.size()) {
            staged.resize(w.size() + 1);
        }
        staged[w.size()].emplace_back(e.frequency, std::move(w));
    }
    lex.buckets_.resize(staged.size());
    for (std::size_t n = 0; n < staged.size(); ++n) {
        auto& bucket = staged[n];
        std::sort(bucket.begin(), bucket.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        lex.buckets_[n].reserve(bucket.size());
        for (auto& [freq, w] : bucket) {
            lex.buckets_[n].push_back(std::move(w));
        }
    }
    return lex;
}

inline Lexicon build_lexicon(const std::vector<RawEntry>& entries)
{
    return build_lexicon(entries, portuguese_allowed_chars());
}

inline std::vector<Word> words_of_length(const Lexicon& lex, std::size_t n)
{
    return lex.words_of_length(n);
}

// Dictionary path from BRAILLE_DICT, if set.
inline std::optional<std::string> default_dictionary_path()
{
    if (const char* p = std::getenv("BRAILLE_DICT"); p && *p) {
        return std::string(p);
    }
    return std::nullopt;
}

} // namespace braille
