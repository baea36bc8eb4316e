#ifndef SUPERDER_RNG_HPP
#define SUPERDER_RNG_HPP

#include "superder/rational.hpp"

#include <cstdint>

namespace superder {

/// splitmix64. Self-contained so seeded runs are reproducible across
/// standard libraries and platforms (the CLI promises byte-identical
/// summaries for a fixed --seed).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x;
        do
            x = next_u64();
        while (x >= limit);
        return x % n;
    }

    /// uniform in [lo, hi], inclusive
    std::int64_t int_in(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// small rational, integer-biased; nonzero unless allow_zero
    Rational small_rational(bool allow_zero = true)
    {
        std::int64_t num = int_in(-3, 3);
        if (!allow_zero)
            while (num == 0)
                num = int_in(-3, 3);
        Rational q(num);
        if (chance(1, 5))
            q /= 2;
        return q;
    }

private:
    std::uint64_t state_;
};

}  // namespace superder

#endif
