#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "braille/code_table.hpp"
#include "braille/morphology.hpp"
#include "braille/render.hpp"
#include "braille/segmentation.hpp"

namespace braille {

struct SegmentationGrid {
    std::vector<Interval> row_bands;
    std::vector<std::vector<Interval>> cell_bands; // one list per row band
};

struct RecognitionOutput {
    std::vector<Word> text;                      // one entry per line
    std::vector<std::vector<BrailleCell>> cells; // observed cells, same shape as text
    std::size_t cells_total = 0;
    std::size_t cells_failed = 0;
    SegmentationGrid grid;
};

struct RecognitionConfig {
    RenderConfig geometry;
    PreprocessConfig preprocess;
    SegmentationConfig segmentation;
    // A dot region counts as raised when this fraction of it is ink.
    double dot_presence = 0.02;
};

/// Summed-area table over a mask for constant-time rectangle counts.
class IntegralMask {
public:
    explicit IntegralMask(const Mask& m) : w_(m.width), h_(m.height), sums_(static_cast<std::size_t>(w_ + 1) * (h_ + 1), 0)
    {
        for (int y = 0; y < h_; ++y) {
            long row = 0;
            for (int x = 0; x < w_; ++x) {
                row += m.at(x, y);
                sums_[idx(x + 1, y + 1)] = sums_[idx(x + 1, y)] + row;
            }
        }
    }

    long count(Rect r) const
    {
        const int x0 = std::clamp(r.x, 0, w_);
        const int y0 = std::clamp(r.y, 0, h_);
        const int x1 = std::clamp(r.right(), 0, w_);
        const int y1 = std::clamp(r.bottom(), 0, h_);
        if (x1 <= x0 || y1 <= y0) {
            return 0;
        }
        return sums_[idx(x1, y1)] - sums_[idx(x0, y1)] - sums_[idx(x1, y0)] + sums_[idx(x0, y0)];
    }

private:
    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * (w_ + 1) + x; }

    int w_;
    int h_;
    std::vector<long> sums_;
};

/// Reads the six dots of one cell. `region` is split into a 2 x 3 grid and
/// each part is a raised dot when its ink ratio exceeds `presence`.
inline BrailleCell read_cell(const IntegralMask& ink, Rect region, double presence)
{
    BrailleCell cell;
    for (int col = 0; col < 2; ++col) {
        for (int row = 0; row < 3; ++row) {
            const int x0 = region.x + region.width * col / 2;
            const int x1 = region.x + region.width * (col + 1) / 2;
            const int y0 = region.y + region.height * row / 3;
            const int y1 = region.y + region.height * (row + 1) / 3;
            const Rect part{x0, y0, x1 - x0, y1 - y0};
            const double area = static_cast<double>(part.width) * part.height;
            if (area > 0 && ink.count(part) > presence * area) {
                cell.set(col * 3 + row + 1, true);
            }
        }
    }
    return cell;
}

struct DecodedCell {
    BrailleCell cell;
    char32_t character = U' ';
    bool mapped = true;
};

/// Decodes the cell image covering `region`. Unmapped patterns come back
/// as the matching Unicode braille pattern character with `mapped` unset.
inline DecodedCell decode_cell_image(const Mask& ink, Rect region, const CodeTable& table, double presence = 0.02)
{
    IntegralMask integral(ink);
    DecodedCell out;
    out.cell = read_cell(integral, region, presence);
    auto c = table.try_decode(out.cell);
    out.mapped = c.has_value();
    out.character = c ? *c : out.cell.unicode_pattern();
    return out;
}

// The dot-grid box of a lattice cell: each sixth is centred on one dot.
inline Rect dot_region(int cell_x, int cell_y, const RenderConfig& g)
{
    const int half = g.dot_pitch / 2;
    return {cell_x + g.dot_radius - half, cell_y + g.dot_radius - half, 2 * g.dot_pitch, 3 * g.dot_pitch};
}

/// Preprocess -> line bands -> cell bands -> dot reading, one page.
inline RecognitionOutput recognize(const GrayImage& img, const CodeTable& table, const RecognitionConfig& cfg = {})
{
    RecognitionOutput out;
    const auto& g = cfg.geometry;
    const Mask ink = preprocess_mask(img, cfg.preprocess);

    std::vector<Interval> line_bands;
    try {
        line_bands = segment_rows(ink, g, cfg.segmentation);
    } catch (const NoLinesFound&) {
        return out;
    }

    const int smear = cfg.segmentation.smear;
    const int pad_begin = smear - 1 - smear / 2;
    const int pad_end = smear / 2;
    const int gap_y = g.cell_pitch_y - g.cell_height();
    const int tolerance = g.dot_pitch / 2;

    // Column bands per line, padded by half the inter-line gap so displaced
    // dots stay inside their own line.
    struct LineSlot {
        Interval rows;
        std::vector<Interval> cols;
    };
    std::vector<LineSlot> lines;
    std::vector<Interval> all_cols;
    for (const auto& band : line_bands) {
        LineSlot slot;
        slot.rows = band;
        const Interval strip{band.begin - gap_y / 2, band.end + gap_y / 2};
        slot.cols = detect_columns(ink, strip, cfg.segmentation);
        all_cols.insert(all_cols.end(), slot.cols.begin(), slot.cols.end());
        lines.push_back(std::move(slot));
    }
    std::sort(all_cols.begin(), all_cols.end(), [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
    auto columns = fit_lattice(all_cols, g.cell_pitch_x, g.cell_width(), pad_begin, pad_end, tolerance);

    const IntegralMask integral(ink);
    int first_col = 0;
    if (columns) {
        first_col = columns->slot_containing(all_cols.front().begin + pad_begin, tolerance);
    }
    for (const auto& line : lines) {
        Word text;
        std::vector<BrailleCell> cells;
        std::vector<Interval> cell_bands;
        if (columns && !line.cols.empty()) {
            int last_col = first_col;
            for (const auto& c : line.cols) {
                last_col = std::max(last_col, columns->slot_containing(c.begin + pad_begin, tolerance));
            }
            for (int k = first_col; k <= last_col; ++k) {
                const Interval span = columns->slot(k);
                const Rect region = dot_region(span.begin, line.rows.begin, g);
                const BrailleCell cell = read_cell(integral, region, cfg.dot_presence);
                auto c = table.try_decode(cell);
                ++out.cells_total;
                if (!c) {
                    ++out.cells_failed;
                }
                text.push_back(c ? *c : cell.unicode_pattern());
                cells.push_back(cell);
                cell_bands.push_back(span);
            }
        }
        out.text.push_back(std::move(text));
        out.cells.push_back(std::move(cells));
        out.grid.row_bands.push_back(line.rows);
        out.grid.cell_bands.push_back(std::move(cell_bands));
    }
    return out;
}

} // namespace braille
