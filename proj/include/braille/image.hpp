#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "braille/errors.hpp"

namespace braille {

/// 8-bit grayscale raster, row-major, 0 = black and 255 = white.
class GrayImage {
public:
    static constexpr std::uint8_t kBlack = 0;
    static constexpr std::uint8_t kWhite = 255;

    GrayImage() = default;
    GrayImage(int width, int height, std::uint8_t fill = kWhite)
        : width_(width), height_(height), pixels_(checked_size(width, height), fill)
    {
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool empty() const noexcept { return pixels_.empty(); }

    std::uint8_t& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    std::uint8_t at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

    std::uint8_t at_clamped(int x, int y) const
    {
        x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
        y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
        return at(x, y);
    }

    std::vector<std::uint8_t>& pixels() noexcept { return pixels_; }
    const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    static std::size_t checked_size(int w, int h)
    {
        if (w < 0 || h < 0) {
            throw InvalidParameter("image dimensions must be non-negative");
        }
        return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    int right() const noexcept { return x + width; }
    int bottom() const noexcept { return y + height; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

inline Rect clip(Rect r, const GrayImage& img)
{
    int x0 = std::max(r.x, 0);
    int y0 = std::max(r.y, 0);
    int x1 = std::min(r.right(), img.width());
    int y1 = std::min(r.bottom(), img.height());
    return {x0, y0, std::max(0, x1 - x0), std::max(0, y1 - y0)};
}

inline GrayImage crop(const GrayImage& img, Rect r)
{
    r = clip(r, img);
    GrayImage out(r.width, r.height);
    for (int y = 0; y < r.height; ++y) {
        for (int x = 0; x < r.width; ++x) {
            out.at(x, y) = img.at(r.x + x, r.y + y);
        }
    }
    return out;
}

class ImageIoError : public BrailleError {
public:
    using BrailleError::BrailleError;
};

namespace pgm {

inline void write(std::ostream& out, const GrayImage& img)
{
    out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixels().size()));
}

inline void write(const std::string& path, const GrayImage& img)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ImageIoError("cannot write '" + path + "'");
    }
    write(out, img);
    if (!out) {
        throw ImageIoError("write failed for '" + path + "'");
    }
}

namespace detail {

inline int read_header_int(std::istream& in)
{
    int c = in.peek();
    while (in && (std::isspace(c) || c == '#')) {
        if (c == '#') {
            std::string skip;
            std::getline(in, skip);
        } else {
            in.get();
        }
        c = in.peek();
    }
    int v = -1;
    if (!(in >> v)) {
        throw ImageIoError("malformed PGM header");
    }
    return v;
}

} // namespace detail

/// Reads binary (P5) 8-bit PGM.
inline GrayImage read(std::istream& in)
{
    char magic[2] = {};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5') {
        throw ImageIoError("not a binary PGM (P5) image");
    }
    int w = detail::read_header_int(in);
    int h = detail::read_header_int(in);
    int maxval = detail::read_header_int(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) {
        throw ImageIoError("unsupported PGM dimensions or depth");
    }
    in.get(); // single whitespace before the raster
    GrayImage img(w, h);
    in.read(reinterpret_cast<char*>(img.pixels().data()), static_cast<std::streamsize>(img.pixels().size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels().size())) {
        throw ImageIoError("truncated PGM raster");
    }
    if (maxval != 255) {
        for (auto& p : img.pixels()) {
            p = static_cast<std::uint8_t>((p * 255 + maxval / 2) / maxval);
        }
    }
    return img;
}

inline GrayImage read(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ImageIoError("cannot open '" + path + "'");
    }
    return read(in);
}

} // namespace pgm

} // namespace braille
