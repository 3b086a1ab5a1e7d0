#pragma once

#include <span>
#include <vector>

#include "braille/code_table.hpp"
#include "braille/image.hpp"

namespace braille {

/// Page geometry shared by the renderer and the recognizer, in pixels.
/// The defaults are standard braille spacing at 600 dpi: 1.5 mm dots,
/// 2.5 mm dot pitch, 6 mm cell pitch and 10 mm line pitch.
struct RenderConfig {
    int dot_radius = 18;
    int dot_pitch = 59;     // centre-to-centre distance of dots within a cell
    int cell_pitch_x = 142; // distance between neighbouring cells on a line
    int cell_pitch_y = 236; // distance between lines
    int margin = 96;
    int page_cells = 32;   // cells per line

    int cell_width() const noexcept { return dot_pitch + 2 * dot_radius; }
    int cell_height() const noexcept { return 2 * dot_pitch + 2 * dot_radius; }
    int page_width() const noexcept { return 2 * margin + page_cells * cell_pitch_x; }

    void validate() const
    {
        if (dot_radius < 1 || dot_pitch < 1 || margin < 0 || page_cells < 1) {
            throw InvalidParameter("render geometry values must be positive");
        }
        if (2 * dot_radius >= dot_pitch) {
            throw InvalidParameter("dots of one cell must not touch");
        }
        if (cell_pitch_x <= 2 * dot_pitch) {
            throw InvalidParameter("cell_pitch_x must exceed 2 * dot_pitch");
        }
        if (cell_pitch_y <= 3 * dot_pitch) {
            throw InvalidParameter("cell_pitch_y must exceed 3 * dot_pitch");
        }
    }
};

namespace detail {

inline void fill_disc(GrayImage& img, int cx, int cy, int r)
{
    const int r2 = r * r;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            if (dx * dx + dy * dy > r2) {
                continue;
            }
            int x = cx + dx;
            int y = cy + dy;
            if (x >= 0 && y >= 0 && x < img.width() && y < img.height()) {
                img.at(x, y) = GrayImage::kBlack;
            }
        }
    }
}

} // namespace detail

/// Draws cell rows onto a white page. Lines are not wrapped: a line wider
/// than the page throws LineTooLong.
inline GrayImage render_cells(std::span<const std::vector<BrailleCell>> lines, const RenderConfig& cfg)
{
    cfg.validate();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() > static_cast<std::size_t>(cfg.page_cells)) {
            throw LineTooLong(i, lines[i].size(), static_cast<std::size_t>(cfg.page_cells));
        }
    }
    const int height = 2 * cfg.margin + static_cast<int>(lines.size()) * cfg.cell_pitch_y;
    GrayImage img(cfg.page_width(), height);
    for (std::size_t j = 0; j < lines.size(); ++j) {
        const int y0 = cfg.margin + static_cast<int>(j) * cfg.cell_pitch_y;
        for (std::size_t k = 0; k < lines[j].size(); ++k) {
            const int x0 = cfg.margin + static_cast<int>(k) * cfg.cell_pitch_x;
            const BrailleCell cell = lines[j][k];
            for (int d = 1; d <= BrailleCell::kDots; ++d) {
                if (!cell.dot(d)) {
                    continue;
                }
                const int col = d <= 3 ? 0 : 1;
                const int row = (d - 1) % 3;
                detail::fill_disc(img, x0 + cfg.dot_radius + col * cfg.dot_pitch,
                                  y0 + cfg.dot_radius + row * cfg.dot_pitch, cfg.dot_radius);
            }
        }
    }
    return img;
}

inline GrayImage render(std::span<const Word> lines, const CodeTable& table, const RenderConfig& cfg = {})
{
    std::vector<std::vector<BrailleCell>> cells;
    cells.reserve(lines.size());
    for (const auto& line : lines) {
        cells.push_back(table.cells(line));
    }
    return render_cells(cells, cfg);
}

} // namespace braille
