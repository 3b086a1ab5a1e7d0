#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "braille/errors.hpp"

namespace braille {

// A six-dot braille cell. Dots are numbered 1-2-3 down the left column and
// 4-5-6 down the right column; dot d is stored in bit d-1, which is also the
// bit layout of the Unicode braille patterns block (U+2800).
class BrailleCell {
public:
    static constexpr int kDots = 6;
    static constexpr unsigned kPatterns = 64;

    constexpr BrailleCell() = default;
    constexpr explicit BrailleCell(std::uint8_t mask) : mask_(mask & 0x3F) {}

    static constexpr BrailleCell from_dots(std::initializer_list<int> dots)
    {
        std::uint8_t m = 0;
        for (int d : dots) {
            m |= static_cast<std::uint8_t>(1u << (d - 1));
        }
        return BrailleCell(m);
    }

    constexpr std::uint8_t mask() const noexcept { return mask_; }
    constexpr bool dot(int d) const noexcept { return (mask_ >> (d - 1)) & 1u; }
    constexpr bool blank() const noexcept { return mask_ == 0; }
    constexpr int raised() const noexcept { return std::popcount(mask_); }

    constexpr void set(int d, bool on) noexcept
    {
        auto bit = static_cast<std::uint8_t>(1u << (d - 1));
        mask_ = on ? (mask_ | bit) : (mask_ & ~bit);
    }

    // Dots in order 1..6.
    constexpr std::array<std::uint8_t, kDots> bits() const noexcept
    {
        std::array<std::uint8_t, kDots> out{};
        for (int d = 1; d <= kDots; ++d) {
            out[d - 1] = dot(d) ? 1 : 0;
        }
        return out;
    }

    std::string to_string() const
    {
        std::string s;
        for (auto b : bits()) {
            s.push_back(b ? '1' : '0');
        }
        return s;
    }

    constexpr char32_t unicode_pattern() const noexcept { return 0x2800 + mask_; }

    friend constexpr bool operator==(BrailleCell, BrailleCell) = default;

private:
    std::uint8_t mask_ = 0;
};

constexpr bool is_braille_pattern(char32_t c) noexcept
{
    return c >= 0x2800 && c <= 0x283F;
}

// Flat dot vector; 6 entries per cell, each 0 or 1.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
    {
        if (bits_.size() % BrailleCell::kDots != 0) {
            throw LengthNotMultipleOfSix(bits_.size());
        }
        for (auto& b : bits_) {
            b = b ? 1 : 0;
        }
    }

    static BitVector from_cells(std::span<const BrailleCell> cells)
    {
        BitVector v;
        v.bits_.reserve(cells.size() * BrailleCell::kDots);
        for (auto c : cells) {
            auto b = c.bits();
            v.bits_.insert(v.bits_.end(), b.begin(), b.end());
        }
        return v;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::size_t cell_count() const noexcept { return bits_.size() / BrailleCell::kDots; }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void flip(std::size_t i) { bits_[i] ^= 1u; }

    BrailleCell cell(std::size_t i) const
    {
        std::uint8_t m = 0;
        for (int d = 0; d < BrailleCell::kDots; ++d) {
            m |= static_cast<std::uint8_t>(bits_[i * BrailleCell::kDots + d] << d);
        }
        return BrailleCell(m);
    }

    std::vector<BrailleCell> cells() const
    {
        std::vector<BrailleCell> out;
        out.reserve(cell_count());
        for (std::size_t i = 0; i < cell_count(); ++i) {
            out.push_back(cell(i));
        }
        return out;
    }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace braille
