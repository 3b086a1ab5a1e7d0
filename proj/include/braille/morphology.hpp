#pragma once

// Binary image operations behind the recognition preprocessing chain.
// Binary images are GrayImages holding only 0 (foreground, ink) and 255.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "braille/image.hpp"

namespace braille {

constexpr std::uint8_t kInkThreshold = 120;

/// Plain 0/1 mask with the image's geometry.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> on;

    Mask() = default;
    Mask(int w, int h) : width(w), height(h), on(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t& at(int x, int y) { return on[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return on[static_cast<std::size_t>(y) * width + x]; }

    std::size_t count() const
    {
        std::size_t n = 0;
        for (auto v : on) {
            n += v;
        }
        return n;
    }

    friend bool operator==(const Mask&, const Mask&) = default;
};

inline Mask to_mask(const GrayImage& img, std::uint8_t threshold = kInkThreshold)
{
    Mask m(img.width(), img.height());
    for (std::size_t i = 0; i < m.on.size(); ++i) {
        m.on[i] = img.pixels()[i] < threshold ? 1 : 0;
    }
    return m;
}

inline GrayImage to_image(const Mask& m)
{
    GrayImage img(m.width, m.height);
    for (std::size_t i = 0; i < m.on.size(); ++i) {
        img.pixels()[i] = m.on[i] ? GrayImage::kBlack : GrayImage::kWhite;
    }
    return img;
}

enum class Border { Zero, Replicate };

/// Foreground count in a kw x kh window anchored at (kw/2, kh/2).
inline std::vector<int> window_count(const Mask& m, int kw, int kh, Border border)
{
    const int w = m.width;
    const int h = m.height;
    const int ax = kw / 2;
    const int ay = kh / 2;
    auto source = [&](int v, int n) -> int {
        if (v >= 0 && v < n) {
            return v;
        }
        if (border == Border::Zero) {
            return -1;
        }
        return v < 0 ? 0 : n - 1;
    };

    // Horizontal running sums over a padded copy of each row.
    std::vector<int> horiz(static_cast<std::size_t>(w) * h);
    std::vector<int> padded(static_cast<std::size_t>(w + kw - 1));
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = m.on.data() + static_cast<std::size_t>(y) * w;
        for (int i = 0; i < w + kw - 1; ++i) {
            const int x = source(i - ax, w);
            padded[i] = x < 0 ? 0 : row[x];
        }
        int sum = 0;
        for (int i = 0; i < kw - 1; ++i) {
            sum += padded[i];
        }
        int* dst = horiz.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            sum += padded[x + kw - 1];
            dst[x] = sum;
            sum -= padded[x];
        }
    }

    // Vertical running sums, one whole row at a time.
    std::vector<int> out(static_cast<std::size_t>(w) * h);
    std::vector<int> acc(static_cast<std::size_t>(w), 0);
    auto add_row = [&](int v, int sign) {
        const int y = source(v, h);
        if (y < 0) {
            return;
        }
        const int* src = horiz.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            acc[x] += sign * src[x];
        }
    };
    for (int i = 0; i < kh - 1; ++i) {
        add_row(i - ay, 1);
    }
    for (int y = 0; y < h; ++y) {
        add_row(y - ay + kh - 1, 1);
        std::copy(acc.begin(), acc.end(), out.begin() + static_cast<std::ptrdiff_t>(y) * w);
        add_row(y - ay, -1);
    }
    return out;
}

inline Mask median_filter(const Mask& m, int size)
{
    auto counts = window_count(m, size, size, Border::Replicate);
    const int majority = size * size / 2 + 1;
    Mask out(m.width, m.height);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out.on[i] = counts[i] >= majority ? 1 : 0;
    }
    return out;
}

inline Mask dilate(const Mask& m, int kw, int kh)
{
    auto counts = window_count(m, kw, kh, Border::Zero);
    Mask out(m.width, m.height);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out.on[i] = counts[i] > 0 ? 1 : 0;
    }
    return out;
}

inline Mask erode(const Mask& m, int kw, int kh)
{
    auto counts = window_count(m, kw, kh, Border::Replicate);
    Mask out(m.width, m.height);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out.on[i] = counts[i] == kw * kh ? 1 : 0;
    }
    return out;
}

inline Mask open(const Mask& m, int size)
{
    return dilate(erode(m, size, size), size, size);
}

/// Clears 8-connected foreground components smaller than `min_area`.
inline Mask remove_small_blobs(const Mask& m, std::size_t min_area)
{
    Mask out = m;
    std::vector<std::uint8_t> seen(m.on.size(), 0);
    std::vector<int> stack;
    std::vector<int> component;
    for (int start = 0; start < static_cast<int>(m.on.size()); ++start) {
        if (!m.on[start] || seen[start]) {
            continue;
        }
        component.clear();
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            component.push_back(p);
            const int px = p % m.width;
            const int py = p / m.width;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = px + dx;
                    const int ny = py + dy;
                    if (nx < 0 || ny < 0 || nx >= m.width || ny >= m.height) {
                        continue;
                    }
                    const int q = ny * m.width + nx;
                    if (m.on[q] && !seen[q]) {
                        seen[q] = 1;
                        stack.push_back(q);
                    }
                }
            }
        }
        if (component.size() < min_area) {
            for (int p : component) {
                out.on[p] = 0;
            }
        }
    }
    return out;
}

struct PreprocessConfig {
    std::uint8_t threshold = kInkThreshold;
    int median_size = 5;
    int opening_size = 3;
    std::size_t min_blob_area = 10;
};

/// Threshold, 5x5 median, 3x3 opening, then small-blob removal.
inline Mask preprocess_mask(const GrayImage& img, const PreprocessConfig& cfg = {})
{
    Mask m = to_mask(img, cfg.threshold);
    m = median_filter(m, cfg.median_size);
    m = open(m, cfg.opening_size);
    return remove_small_blobs(m, cfg.min_blob_area);
}

inline GrayImage preprocess(const GrayImage& img, const PreprocessConfig& cfg = {})
{
    return to_image(preprocess_mask(img, cfg));
}

} // namespace braille
