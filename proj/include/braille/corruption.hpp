#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "braille/code_table.hpp"
#include "braille/errors.hpp"
#include "braille/rng.hpp"

namespace braille {

struct Corruption {
    Word word;
    std::vector<BrailleCell> cells;
    std::size_t flips = 0;   // dot bits flipped
    std::size_t redraws = 0; // draws rejected for producing unmapped cells
};

// Number of dot bits to flip for `percent` of a word with `cells` cells,
// rounded to nearest with halves away from zero.
inline std::size_t flip_count(double percent, std::size_t cells)
{
    return static_cast<std::size_t>(std::llround(percent / 100.0 * 6.0 * static_cast<double>(cells)));
}

/// Flips `flip_count(percent, |word|)` distinct dot bits of the word chosen
/// uniformly at random. A draw that leaves any cell unmapped by the table is
/// discarded and redrawn from the original word; after `max_redraws`
/// rejected draws CorruptionInfeasible is thrown.
inline Corruption inject_bit_errors(WordView word, double percent, Rng& rng, const CodeTable& table,
                                    std::size_t max_redraws = 1000)
{
    if (!(percent >= 0.0 && percent <= 100.0)) {
        throw InvalidParameter("error percentage must lie in [0, 100]");
    }
    const auto original = table.cells(word);
    const std::size_t bits = 6 * original.size();
    const std::size_t k = flip_count(percent, original.size());

    Corruption out;
    out.flips = k;
    std::vector<std::size_t> order(bits);
    for (;;) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Partial Fisher-Yates: the first k entries are a uniform k-subset.
        for (std::size_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::size_t>(rng.below(bits - i));
            std::swap(order[i], order[j]);
        }
        out.cells = original;
        for (std::size_t i = 0; i < k; ++i) {
            auto& cell = out.cells[order[i] / 6];
            const int dot = static_cast<int>(order[i] % 6) + 1;
            cell.set(dot, !cell.dot(dot));
        }
        bool mapped = true;
        for (const auto& c : out.cells) {
            mapped = mapped && table.maps(c);
        }
        if (mapped) {
            out.word = table.decode_cells(out.cells);
            return out;
        }
        if (out.redraws == max_redraws) {
            throw CorruptionInfeasible("no mapped corruption found after " + std::to_string(max_redraws)
                                       + " redraws");
        }
        ++out.redraws;
    }
}

} // namespace braille
