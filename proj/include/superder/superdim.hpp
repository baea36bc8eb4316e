#ifndef SUPERDER_SUPERDIM_HPP
#define SUPERDER_SUPERDIM_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>

namespace superder {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}

/// Superdimension (dim even part, dim odd part), with the componentwise
/// partial order on ℤ×ℤ. |(m,n)| = m+n.
struct SuperDim {
    std::size_t even = 0;
    std::size_t odd = 0;

    std::size_t total() const { return even + odd; }

    friend bool operator==(const SuperDim&, const SuperDim&) = default;

    friend SuperDim operator+(SuperDim a, SuperDim b) { return {a.even + b.even, a.odd + b.odd}; }

    friend SuperDim operator-(SuperDim a, SuperDim b)
    {
        if (a.even < b.even || a.odd < b.odd)
            throw std::invalid_argument("SuperDim subtraction would go negative");
        return {a.even - b.even, a.odd - b.odd};
    }

    friend std::ostream& operator<<(std::ostream& os, SuperDim d)
    {
        return os << "(" << d.even << ", " << d.odd << ")";
    }
};

/// The partial order: (m,n) ≤ (k,l) ⇔ m ≤ k and n ≤ l. Not total.
inline bool leq(SuperDim a, SuperDim b) { return a.even <= b.even && a.odd <= b.odd; }

}  // namespace superder

#endif
