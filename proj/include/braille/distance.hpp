#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "braille/utf8.hpp"

namespace braille {

// Unit-cost insert/delete/substitute edit distance.
inline std::size_t levenshtein(WordView a, WordView b)
{
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({up + 1, row[j - 1] + 1, sub});
            diag = up;
        }
    }
    return row[b.size()];
}

// Optimal string alignment distance (Levenshtein plus adjacent
// transposition, no substring edited twice), giving up once the result is
// known to exceed `bound`. Returns bound + 1 in that case.
inline std::size_t osa_distance(WordView a, WordView b, std::size_t bound)
{
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t over = bound + 1;
    if ((n > m ? n - m : m - n) > bound) {
        return over;
    }
    std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    // Transpositions look two rows back, so stop only after two
    // consecutive rows exceed the bound.
    bool prev_over = false;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        std::size_t row_min = cur[0];
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            std::size_t v = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
                v = std::min(v, prev2[j - 2] + 1);
            }
            cur[j] = v;
            row_min = std::min(row_min, v);
        }
        if (row_min > bound && prev_over) {
            return over;
        }
        prev_over = row_min > bound;
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    return std::min(prev[m], over);
}

} // namespace braille
