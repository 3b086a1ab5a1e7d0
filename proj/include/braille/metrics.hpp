#pragma once

#include <span>
#include <vector>

#include "braille/distance.hpp"
#include "braille/errors.hpp"
#include "braille/lexicon.hpp"

namespace braille {

struct Metrics {
    double avg_levenshtein = 0.0;
    double hit_rate = 0.0;
    double char_error = 0.0;
    double word_error = 0.0;
    double dict_coverage = 0.0;
    std::size_t tokens = 0;
};

namespace detail {

inline double percent(std::size_t part, std::size_t whole)
{
    return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

inline void require_same_size(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw LengthMismatch(a, b);
    }
}

} // namespace detail

/// Percentage of positions where the prediction equals the ground truth.
inline double hit_rate(std::span<const Word> predicted, std::span<const Word> truth)
{
    detail::require_same_size(predicted.size(), truth.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        hits += predicted[i] == truth[i] ? 1 : 0;
    }
    return detail::percent(hits, truth.size());
}

inline double avg_levenshtein(std::span<const Word> predicted, std::span<const Word> truth)
{
    detail::require_same_size(predicted.size(), truth.size());
    if (truth.empty()) {
        return 0.0;
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        total += levenshtein(predicted[i], truth[i]);
    }
    return static_cast<double>(total) / static_cast<double>(truth.size());
}

/// Position-wise character error over aligned words. Characters past the
/// end of the shorter word count as errors; the denominator is the number
/// of ground-truth characters.
inline double char_error(std::span<const Word> recognized, std::span<const Word> truth)
{
    detail::require_same_size(recognized.size(), truth.size());
    std::size_t wrong = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const auto& r = recognized[i];
        const auto& t = truth[i];
        const std::size_t common = std::min(r.size(), t.size());
        for (std::size_t k = 0; k < common; ++k) {
            wrong += r[k] != t[k] ? 1 : 0;
        }
        wrong += std::max(r.size(), t.size()) - common;
        total += t.size();
    }
    return detail::percent(std::min(wrong, total), total);
}

inline double word_error(std::span<const Word> recognized, std::span<const Word> truth)
{
    detail::require_same_size(recognized.size(), truth.size());
    return truth.empty() ? 0.0 : 100.0 - hit_rate(recognized, truth);
}

inline double dict_coverage(std::span<const Word> truth, const Lexicon& lex)
{
    std::size_t found = 0;
    for (const auto& w : truth) {
        found += lex.contains(w) ? 1 : 0;
    }
    return detail::percent(found, truth.size());
}

} // namespace braille
