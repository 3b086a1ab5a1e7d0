#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "braille/code_table.hpp"
#include "braille/lexicon.hpp"
#include "braille/parallel.hpp"

namespace braille {

/// Hamming distance between the dot vectors of two equal-length words.
inline std::size_t compare(WordView p_t, WordView p_d, const CodeTable& table)
{
    if (p_t.size() != p_d.size()) {
        throw LengthMismatch(p_t.size(), p_d.size());
    }
    std::size_t diff = 0;
    for (std::size_t i = 0; i < p_t.size(); ++i) {
        auto a = table.encode(p_t[i], i);
        auto b = table.encode(p_d[i], i);
        diff += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(a.mask() ^ b.mask())));
    }
    return diff;
}

struct RevisionResult {
    Word original;
    Word corrected;
    bool changed = false;
    // Distance to the chosen word; empty when no same-length candidate
    // existed or the word could not be encoded.
    std::optional<std::size_t> braille_distance;
    std::size_t candidate_count = 0;
};

namespace detail {

inline RevisionResult unchanged(WordView w)
{
    RevisionResult r;
    r.original = Word(w);
    r.corrected = Word(w);
    return r;
}

} // namespace detail

/// Reference revision: scans the same-length bucket with `compare`, keeping
/// the first strict minimum so the bucket order breaks ties.
inline RevisionResult revise_word(WordView p_t, const Lexicon& lex, const CodeTable& table)
{
    table.require_encodable(p_t);
    const auto& bucket = lex.words_of_length(p_t.size());
    RevisionResult r = detail::unchanged(p_t);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const Word* chosen = nullptr;
    for (const auto& w : bucket) {
        if (!table.can_encode(w)) {
            continue;
        }
        ++r.candidate_count;
        auto d = compare(p_t, w, table);
        if (d < best) {
            best = d;
            chosen = &w;
        }
    }
    if (chosen) {
        r.corrected = *chosen;
        r.changed = r.corrected != r.original;
        r.braille_distance = best;
    }
    return r;
}

/// Revision over a lexicon whose dot vectors are packed once up front.
///
/// Ten cells fit in one 64-bit word, so a candidate of length n costs
/// ceil(n/10) XOR/popcount pairs. Results match `revise_word` exactly.
class BrailleCorrector {
public:
    static constexpr std::size_t kCellsPerChunk = 10;

    BrailleCorrector(const Lexicon& lex, const CodeTable& table) : lex_(&lex), table_(&table)
    {
        buckets_.resize(lex.max_length() + 1);
        for (std::size_t n = 1; n <= lex.max_length(); ++n) {
            const auto& words = lex.words_of_length(n);
            auto& b = buckets_[n];
            b.chunks = chunks_for(n);
            b.codes.reserve(words.size() * b.chunks);
            for (std::size_t i = 0; i < words.size(); ++i) {
                if (!table.can_encode(words[i])) {
                    continue;
                }
                pack(table.cells(words[i]), b.codes);
                b.index.push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    const Lexicon& lexicon() const noexcept { return *lex_; }
    const CodeTable& table() const noexcept { return *table_; }

    RevisionResult revise(WordView p_t) const
    {
        auto cells = table_->cells(p_t);
        return revise_cells(p_t, cells);
    }

    // `cells` are the observed cells of `p_t`; they may include patterns
    // the table does not map.
    RevisionResult revise_cells(WordView p_t, std::span<const BrailleCell> cells) const
    {
        RevisionResult r = detail::unchanged(p_t);
        const std::size_t n = cells.size();
        if (n == 0 || n >= buckets_.size() || buckets_[n].index.empty()) {
            return r;
        }
        const auto& b = buckets_[n];
        std::vector<std::uint64_t> query;
        query.reserve(b.chunks);
        pack(cells, query);

        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::size_t best_slot = 0;
        const std::size_t count = b.index.size();
        const std::uint64_t* code = b.codes.data();
        for (std::size_t slot = 0; slot < count; ++slot, code += b.chunks) {
            std::size_t d = 0;
            for (std::size_t c = 0; c < b.chunks; ++c) {
                d += static_cast<std::size_t>(std::popcount(code[c] ^ query[c]));
            }
            if (d < best) {
                best = d;
                best_slot = slot;
                if (d == 0) {
                    break;
                }
            }
        }
        r.candidate_count = count;
        r.corrected = lex_->words_of_length(n)[b.index[best_slot]];
        r.changed = r.corrected != r.original;
        r.braille_distance = best;
        return r;
    }

private:
    struct Bucket {
        std::size_t chunks = 0;
        std::vector<std::uint64_t> codes;
        std::vector<std::uint32_t> index; // position in the lexicon bucket
    };

    static std::size_t chunks_for(std::size_t n) { return (n + kCellsPerChunk - 1) / kCellsPerChunk; }

    static void pack(std::span<const BrailleCell> cells, std::vector<std::uint64_t>& out)
    {
        const std::size_t chunks = chunks_for(cells.size());
        for (std::size_t c = 0; c < chunks; ++c) {
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < kCellsPerChunk; ++k) {
                std::size_t i = c * kCellsPerChunk + k;
                if (i >= cells.size()) {
                    break;
                }
                v |= static_cast<std::uint64_t>(cells[i].mask()) << (6 * k);
            }
            out.push_back(v);
        }
    }

    const Lexicon* lex_;
    const CodeTable* table_;
    std::vector<Bucket> buckets_;
};

struct TextRevision {
    std::vector<Word> tokens;
    std::vector<RevisionResult> results;

    std::size_t changed_count() const
    {
        std::size_t n = 0;
        for (const auto& r : results) {
            n += r.changed ? 1 : 0;
        }
        return n;
    }
};

/// Revises every token; tokens that are empty or not encodable pass through.
inline TextRevision revise_text(std::span<const Word> tokens, const BrailleCorrector& corrector,
                                unsigned threads = default_threads())
{
    TextRevision out;
    out.tokens.resize(tokens.size());
    out.results.resize(tokens.size());
    parallel_for(
        tokens.size(),
        [&](std::size_t i) {
            const auto& tok = tokens[i];
            if (tok.empty() || !corrector.table().can_encode(tok)) {
                out.results[i] = detail::unchanged(tok);
            } else {
                out.results[i] = corrector.revise(tok);
            }
            out.tokens[i] = out.results[i].corrected;
        },
        threads);
    return out;
}

inline TextRevision revise_text(std::span<const Word> tokens, const Lexicon& lex, const CodeTable& table)
{
    BrailleCorrector corrector(lex, table);
    return revise_text(tokens, corrector);
}

} // namespace braille
