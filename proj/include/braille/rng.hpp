#pragma once

#include <cstdint>
#include <initializer_list>

namespace braille {

// SplitMix64. Small, fast and fully specified, so seeded streams are the
// same on every platform.
class Rng {
public:
    explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection.
    constexpr std::uint64_t below(std::uint64_t n) noexcept
    {
        if (n <= 1) {
            return 0;
        }
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v = next();
        while (v >= limit) {
            v = next();
        }
        return v % n;
    }

    // Uniform in [lo, hi].
    constexpr std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Independent stream seed for a (seed, key...) tuple.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys)
{
    std::uint64_t h = seed;
    for (auto k : keys) {
        Rng mix(h ^ (k + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2)));
        h = mix.next();
    }
    return h;
}

} // namespace braille
