#pragma once

// Frequency-ranked edit-distance corrector in the style of Norvig's spelling
// corrector (and pySpellChecker, which is built on it): a known word is kept,
// otherwise the most frequent known word at the smallest edit distance within
// the threshold wins, and with no candidate the input is returned as is.

#include <bit>
#include <cstdint>
#include <tuple>
#include <vector>

#include "braille/distance.hpp"
#include "braille/lexicon.hpp"

namespace braille {

/// Reference route: scores every lexicon word. Slow, used by tests.
inline Word baseline_correct(WordView word, const Lexicon& lex, std::size_t max_distance = 2)
{
    Word query = to_lower(word);
    if (lex.contains(query)) {
        return query;
    }
    std::tuple<std::size_t, std::uint64_t, const Word*> best{max_distance + 1, 0, nullptr};
    for (std::size_t n = 1; n <= lex.max_length(); ++n) {
        for (const auto& w : lex.words_of_length(n)) {
            auto d = osa_distance(query, w, max_distance);
            if (d > max_distance) {
                continue;
            }
            auto f = lex.frequency(w);
            auto& [bd, bf, bw] = best;
            if (d < bd || (d == bd && (f > bf || (f == bf && (!bw || w < *bw))))) {
                best = {d, f, &w};
            }
        }
    }
    auto* chosen = std::get<2>(best);
    return chosen ? *chosen : Word(word);
}

/// Same selection as `baseline_correct`, with a 64-bit character signature
/// per word to skip candidates that cannot be within reach.
///
/// A single edit removes at most one distinct character and adds at most
/// one, so if either signature has more than `max_distance` bits the other
/// lacks, the pair is farther apart than the threshold.
class BaselineCorrector {
public:
    explicit BaselineCorrector(const Lexicon& lex, std::size_t max_distance = 2)
        : lex_(&lex), max_distance_(max_distance)
    {
        buckets_.resize(lex.max_length() + 1);
        for (std::size_t n = 1; n <= lex.max_length(); ++n) {
            for (const auto& w : lex.words_of_length(n)) {
                buckets_[n].push_back({signature(w), lex.frequency(w), &w});
            }
        }
    }

    std::size_t max_distance() const noexcept { return max_distance_; }

    Word correct(WordView word) const
    {
        Word query = to_lower(word);
        if (lex_->contains(query)) {
            return query;
        }
        const std::uint64_t sig = signature(query);
        const std::size_t n = query.size();
        const std::size_t lo = n > max_distance_ ? n - max_distance_ : 1;
        const std::size_t hi = std::min(n + max_distance_, buckets_.empty() ? 0 : buckets_.size() - 1);

        std::size_t best_d = max_distance_ + 1;
        std::uint64_t best_f = 0;
        const Word* best_w = nullptr;
        for (std::size_t len = lo; len <= hi; ++len) {
            for (const auto& c : buckets_[len]) {
                if (std::popcount(sig & ~c.sig) > static_cast<int>(max_distance_)
                    || std::popcount(c.sig & ~sig) > static_cast<int>(max_distance_)) {
                    continue;
                }
                auto d = osa_distance(query, *c.word, max_distance_);
                if (d > max_distance_) {
                    continue;
                }
                if (d < best_d || (d == best_d && (c.freq > best_f || (c.freq == best_f && *c.word < *best_w)))) {
                    best_d = d;
                    best_f = c.freq;
                    best_w = c.word;
                }
            }
        }
        return best_w ? *best_w : Word(word);
    }

private:
    struct Candidate {
        std::uint64_t sig;
        std::uint64_t freq;
        const Word* word;
    };

    static std::uint64_t signature(WordView w)
    {
        std::uint64_t s = 0;
        for (char32_t c : w) {
            s |= std::uint64_t{1} << ((static_cast<std::uint64_t>(c) * 0x9E3779B97F4A7C15ull) >> 58);
        }
        return s;
    }

    const Lexicon* lex_;
    std::size_t max_distance_;
    std::vector<std::vector<Candidate>> buckets_;
};

} // namespace braille
