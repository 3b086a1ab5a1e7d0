#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "braille/image.hpp"
#include "braille/rng.hpp"

namespace braille {

/// Separable Gaussian blur, kernel radius ceil(3 sigma), clamped edges.
inline GrayImage gaussian_blur(const GrayImage& img, double sigma)
{
    if (!(sigma > 0.0)) {
        throw InvalidParameter("blur sigma must be positive");
    }
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
        sum += kernel[i + radius];
    }
    for (auto& k : kernel) {
        k /= sum;
    }

    const int w = img.width();
    const int h = img.height();
    std::vector<double> tmp(static_cast<std::size_t>(w) * h);
    std::vector<double> line(static_cast<std::size_t>(w + 2 * radius));
    for (int y = 0; y < h; ++y) {
        for (int i = 0; i < w + 2 * radius; ++i) {
            line[i] = img.at(std::clamp(i - radius, 0, w - 1), y);
        }
        double* dst = tmp.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = 0; k <= 2 * radius; ++k) {
                acc += kernel[k] * line[x + k];
            }
            dst[x] = acc;
        }
    }
    GrayImage out(w, h);
    std::vector<double> acc(static_cast<std::size_t>(w));
    for (int y = 0; y < h; ++y) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int k = 0; k <= 2 * radius; ++k) {
            const int yy = std::clamp(y + k - radius, 0, h - 1);
            const double* src = tmp.data() + static_cast<std::size_t>(yy) * w;
            for (int x = 0; x < w; ++x) {
                acc[x] += kernel[k] * src[x];
            }
        }
        for (int x = 0; x < w; ++x) {
            out.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(acc[x]), 0L, 255L));
        }
    }
    return out;
}

/// Pixel spread: every output pixel copies the input pixel at a uniform
/// random offset in [-amount, amount] on each axis (clamped to the image).
inline GrayImage spread_noise(const GrayImage& img, int amount, std::uint64_t seed)
{
    if (amount < 0) {
        throw InvalidParameter("spread amount must be non-negative");
    }
    if (amount == 0) {
        return img;
    }
    Rng rng(seed);
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            auto dx = static_cast<int>(rng.between(-amount, amount));
            auto dy = static_cast<int>(rng.between(-amount, amount));
            out.at(x, y) = img.at_clamped(x + dx, y + dy);
        }
    }
    return out;
}

} // namespace braille
