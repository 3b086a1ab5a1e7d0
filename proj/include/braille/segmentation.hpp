#pragma once

// Line and cell segmentation. Each axis follows the same recipe: smear the
// ink with a long structuring element so every braille line (or cell
// column) becomes a solid band, find the band borders with Canny, and read
// them off an axis-aligned Hough accumulator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "braille/errors.hpp"
#include "braille/morphology.hpp"
#include "braille/render.hpp"

namespace braille {

/// Half-open pixel range [begin, end).
struct Interval {
    int begin = 0;
    int end = 0;

    int length() const noexcept { return end - begin; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct CannyConfig {
    int low = 50;
    int high = 150;
};

/// Canny edge detector on an 8-bit rendering of the mask (ink = 255):
/// 3x3 Sobel, L1 magnitude, non-maximum suppression, hysteresis.
inline Mask canny(const Mask& m, const CannyConfig& cfg = {})
{
    const int w = m.width;
    const int h = m.height;
    auto val = [&](int x, int y) {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return m.at(x, y) ? 255 : 0;
    };
    std::vector<int> mag(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::uint8_t> dir(static_cast<std::size_t>(w) * h, 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int gx = (val(x + 1, y - 1) + 2 * val(x + 1, y) + val(x + 1, y + 1))
                   - (val(x - 1, y - 1) + 2 * val(x - 1, y) + val(x - 1, y + 1));
            int gy = (val(x - 1, y + 1) + 2 * val(x, y + 1) + val(x + 1, y + 1))
                   - (val(x - 1, y - 1) + 2 * val(x, y - 1) + val(x + 1, y - 1));
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            mag[i] = std::abs(gx) + std::abs(gy);
            // 0: horizontal gradient, 1: 45 deg, 2: vertical, 3: 135 deg
            const double ax = std::abs(gx);
            const double ay = std::abs(gy);
            if (ay <= ax * 0.4142135623730951) {
                dir[i] = 0;
            } else if (ay >= ax * 2.414213562373095) {
                dir[i] = 2;
            } else {
                dir[i] = (gx > 0) == (gy > 0) ? 1 : 3;
            }
        }
    }
    auto mag_at = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= w || y >= h) {
            return 0;
        }
        return mag[static_cast<std::size_t>(y) * w + x];
    };
    // 0 = none, 1 = weak, 2 = strong
    std::vector<std::uint8_t> cls(static_cast<std::size_t>(w) * h, 0);
    std::vector<int> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            const int g = mag[i];
            if (g <= cfg.low) {
                continue;
            }
            int b = 0;
            int a = 0;
            switch (dir[i]) {
            case 0: b = mag_at(x - 1, y); a = mag_at(x + 1, y); break;
            case 2: b = mag_at(x, y - 1); a = mag_at(x, y + 1); break;
            case 1: b = mag_at(x - 1, y - 1); a = mag_at(x + 1, y + 1); break;
            default: b = mag_at(x + 1, y - 1); a = mag_at(x - 1, y + 1); break;
            }
            if (g > b && g >= a) {
                cls[i] = g > cfg.high ? 2 : 1;
                if (cls[i] == 2) {
                    stack.push_back(static_cast<int>(i));
                }
            }
        }
    }
    Mask edges(w, h);
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        if (edges.on[p]) {
            continue;
        }
        edges.on[p] = 1;
        const int px = p % w;
        const int py = p / w;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = px + dx;
                const int ny = py + dy;
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) {
                    continue;
                }
                const int q = ny * w + nx;
                if (cls[q] && !edges.on[q]) {
                    stack.push_back(q);
                }
            }
        }
    }
    return edges;
}

enum class Axis { Horizontal, Vertical };

/// Hough accumulator restricted to theta = 90 deg (horizontal lines, rho = y)
/// or theta = 0 deg (vertical lines, rho = x).
inline std::vector<int> hough_axis(const Mask& edges, Axis axis)
{
    std::vector<int> acc(axis == Axis::Horizontal ? edges.height : edges.width, 0);
    for (int y = 0; y < edges.height; ++y) {
        for (int x = 0; x < edges.width; ++x) {
            if (edges.at(x, y)) {
                ++acc[axis == Axis::Horizontal ? y : x];
            }
        }
    }
    return acc;
}

/// Strongest rho of every run of accumulator cells at or above `min_votes`.
inline std::vector<int> hough_peaks(const std::vector<int>& acc, int min_votes)
{
    std::vector<int> peaks;
    int i = 0;
    const int n = static_cast<int>(acc.size());
    while (i < n) {
        if (acc[i] < min_votes) {
            ++i;
            continue;
        }
        int best = i;
        while (i < n && acc[i] >= min_votes) {
            if (acc[i] > acc[best]) {
                best = i;
            }
            ++i;
        }
        peaks.push_back(best);
    }
    return peaks;
}

struct SegmentationConfig {
    int smear = 30; // short side of the smearing element; bridges the dot gap inside a cell
    double min_vote_ratio = 0.3; // Hough votes needed, relative to the line length
    CannyConfig canny;
};

namespace detail {

// Pairs consecutive Hough lines into bands of the smeared mask. `filled`
// tells whether a given row/column of the smeared mask is inside a band.
template <typename Filled>
std::vector<Interval> bands_from_lines(const std::vector<int>& lines, int extent, Filled&& filled)
{
    std::vector<Interval> bands;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const int a = lines[i];
        const int b = lines[i + 1];
        if (b - a < 2 || !filled((a + b) / 2)) {
            continue;
        }
        Interval band{filled(a) ? a : a + 1, filled(b) ? b + 1 : b};
        band.begin = std::clamp(band.begin, 0, extent);
        band.end = std::clamp(band.end, 0, extent);
        if (band.length() > 0 && (bands.empty() || band.begin >= bands.back().end)) {
            bands.push_back(band);
        }
    }
    return bands;
}

} // namespace detail

/// Text-line bands of a preprocessed page, top to bottom.
/// Raw line bands straight from the Hough lines. A line without dots in its
/// middle row can come back as two bands.
inline std::vector<Interval> detect_rows(const Mask& ink, const SegmentationConfig& cfg = {})
{
    if (ink.count() == 0) {
        throw NoLinesFound();
    }
    const Mask smeared = dilate(ink, ink.width, cfg.smear);
    const Mask edges = canny(smeared, cfg.canny);
    const auto acc = hough_axis(edges, Axis::Horizontal);
    const auto lines = hough_peaks(acc, std::max(1, static_cast<int>(cfg.min_vote_ratio * ink.width)));
    auto row_filled = [&](int y) {
        if (y < 0 || y >= smeared.height) {
            return false;
        }
        int n = 0;
        for (int x = 0; x < smeared.width; ++x) {
            n += smeared.at(x, y);
        }
        return n >= cfg.min_vote_ratio * smeared.width;
    };
    auto bands = detail::bands_from_lines(lines, ink.height, row_filled);
    if (bands.empty()) {
        throw NoLinesFound();
    }
    return bands;
}


/// Raw cell-column bands inside the rows `band`, left to right, before any
/// blank-cell recovery.
inline std::vector<Interval> detect_columns(const Mask& ink, Interval band, const SegmentationConfig& cfg = {})
{
    band.begin = std::clamp(band.begin, 0, ink.height);
    band.end = std::clamp(band.end, 0, ink.height);
    if (band.length() <= 0) {
        return {};
    }
    Mask strip(ink.width, band.length());
    for (int y = 0; y < band.length(); ++y) {
        for (int x = 0; x < ink.width; ++x) {
            strip.at(x, y) = ink.at(x, band.begin + y);
        }
    }
    if (strip.count() == 0) {
        return {};
    }
    const Mask smeared = dilate(strip, cfg.smear, 2 * strip.height + 1);
    const Mask edges = canny(smeared, cfg.canny);
    const auto acc = hough_axis(edges, Axis::Vertical);
    const auto lines = hough_peaks(acc, std::max(1, static_cast<int>(cfg.min_vote_ratio * strip.height)));
    auto col_filled = [&](int x) { return x >= 0 && x < smeared.width && smeared.at(x, smeared.height / 2) != 0; };
    return detail::bands_from_lines(lines, ink.width, col_filled);
}

/// Uniform lattice of cell slots along one axis: slot k covers
/// [offset + k * pitch, offset + k * pitch + extent).
struct Lattice {
    int offset = 0;
    int pitch = 1;
    int extent = 1;

    Interval slot(int k) const { return {offset + k * pitch, offset + k * pitch + extent}; }

    // Slot holding ink that starts at `ink_begin`, whichever dot row or
    // column that ink belongs to.
    int slot_containing(int ink_begin, int tolerance) const
    {
        return static_cast<int>(std::floor((ink_begin - offset + tolerance) / static_cast<double>(pitch)));
    }
};

/// Fits the lattice offset to smeared bands. `pad_begin`/`pad_end` undo the
/// smearing so each band is compared by its ink extent. Every band is tried
/// as aligned with the first and with the last dot of a slot; the offset
/// that places the most bands inside a slot wins, preferring first-dot
/// alignment on ties. Returns nothing for an empty input.
inline std::optional<Lattice> fit_lattice(const std::vector<Interval>& bands, int pitch, int extent, int pad_begin,
                                          int pad_end, int tolerance)
{
    if (bands.empty()) {
        return std::nullopt;
    }
    auto wrap = [&](int v) { return ((v % pitch) + pitch) % pitch; };
    std::vector<int> candidates;
    for (const auto& b : bands) {
        candidates.push_back(wrap(b.begin + pad_begin));
    }
    for (const auto& b : bands) {
        candidates.push_back(wrap(b.end - pad_end - extent));
    }
    auto contained = [&](const Interval& b, int offset) {
        const int ink0 = b.begin + pad_begin;
        const int ink1 = b.end - pad_end;
        const int k = static_cast<int>(std::floor((ink0 - offset + tolerance) / static_cast<double>(pitch)));
        const int s0 = offset + k * pitch;
        return ink0 >= s0 - tolerance && ink1 <= s0 + extent + tolerance;
    };
    int best = candidates.front();
    int best_score = -1;
    for (int c : candidates) {
        int score = 0;
        for (const auto& b : bands) {
            score += contained(b, c) ? 1 : 0;
        }
        if (score > best_score) {
            best_score = score;
            best = c;
        }
    }
    // Refine with the median residual of bands whose first dot sits at the
    // slot start.
    std::vector<int> residuals;
    for (const auto& b : bands) {
        const int ink0 = b.begin + pad_begin;
        int r = wrap(ink0 - best);
        if (r > pitch / 2) {
            r -= pitch;
        }
        if (std::abs(r) <= tolerance) {
            residuals.push_back(r);
        }
    }
    if (!residuals.empty()) {
        std::nth_element(residuals.begin(), residuals.begin() + residuals.size() / 2, residuals.end());
        best = wrap(best + residuals[residuals.size() / 2]);
    }
    return Lattice{best, pitch, extent};
}

/// Cell bands of one text line, with blank cells between detected cells
/// recovered from the cell pitch.
inline std::vector<Interval> segment_cells(const Mask& ink, Interval band, const RenderConfig& geometry = {},
                                           const SegmentationConfig& cfg = {})
{
    const auto cols = detect_columns(ink, band, cfg);
    const int pad_begin = cfg.smear - 1 - cfg.smear / 2;
    const int pad_end = cfg.smear / 2;
    auto lattice = fit_lattice(cols, geometry.cell_pitch_x, geometry.cell_width(), pad_begin, pad_end,
                               geometry.dot_pitch / 2);
    if (!lattice) {
        return {};
    }
    const int tolerance = geometry.dot_pitch / 2;
    const int first = lattice->slot_containing(cols.front().begin + pad_begin, tolerance);
    const int last = lattice->slot_containing(cols.back().begin + pad_begin, tolerance);
    std::vector<Interval> cells;
    for (int k = first; k <= last; ++k) {
        cells.push_back(lattice->slot(k));
    }
    return cells;
}

/// One band per text line, top to bottom, each exactly one cell high. Raw
/// bands are placed on the line-pitch lattice, so split lines merge and
/// blank lines between text lines are kept.
inline std::vector<Interval> segment_rows(const Mask& ink, const RenderConfig& geometry = {},
                                          const SegmentationConfig& cfg = {})
{
    const auto raw = detect_rows(ink, cfg);
    const int pad_begin = cfg.smear - 1 - cfg.smear / 2;
    const int pad_end = cfg.smear / 2;
    const int tolerance = geometry.dot_pitch / 2;
    const auto lattice = fit_lattice(raw, geometry.cell_pitch_y, geometry.cell_height(), pad_begin, pad_end, tolerance);
    const int first = lattice->slot_containing(raw.front().begin + pad_begin, tolerance);
    const int last = lattice->slot_containing(raw.back().begin + pad_begin, tolerance);
    std::vector<Interval> lines;
    for (int k = first; k <= last; ++k) {
        lines.push_back(lattice->slot(k));
    }
    return lines;
}

inline std::vector<Interval> segment_rows(const GrayImage& binary, const RenderConfig& geometry = {},
                                          const SegmentationConfig& cfg = {})
{
    return segment_rows(to_mask(binary), geometry, cfg);
}

} // namespace braille
