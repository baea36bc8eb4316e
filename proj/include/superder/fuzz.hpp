#ifndef SUPERDER_FUZZ_HPP
#define SUPERDER_FUZZ_HPP

#include "superder/rng.hpp"
#include "superder/superalgebra.hpp"

#include <cstddef>
#include <vector>

namespace superder {

/// Random nilpotent Lie superalgebra of class exactly 2 with total dimension
/// in [2, max_dim]: a central extension V ⊕ Z with a random graded
/// super-skew form (Jacobi-free construction — every bracket is central).
/// No surjectivity or radical condition is imposed, so the samples range
/// over generalized Heisenberg algebras padded by central/abelian parts.
inline LieSuperalgebra random_class2(Rng& rng, std::size_t max_dim)
{
    for (;;) {
        const std::size_t total =
            static_cast<std::size_t>(rng.int_in(2, static_cast<std::int64_t>(max_dim < 2 ? 2 : max_dim)));
        const std::size_t zdim = static_cast<std::size_t>(rng.int_in(1, static_cast<std::int64_t>(total - 1)));
        const std::size_t vdim = total - zdim;
        const std::size_t m1 = static_cast<std::size_t>(rng.int_in(0, static_cast<std::int64_t>(zdim)));
        const std::size_t n1 = zdim - m1;
        const std::size_t a = static_cast<std::size_t>(rng.int_in(0, static_cast<std::int64_t>(vdim)));
        const std::size_t b = vdim - a;

        // some slot must be able to produce a nonzero bracket
        const bool feasible = (m1 >= 1 && (a >= 2 || b >= 1)) || (n1 >= 1 && a >= 1 && b >= 1);
        if (!feasible)
            continue;

        const SuperDim d{a + m1, b + n1};
        const std::size_t n = d.total();
        // ambient coordinates: V_e | Z_e | V_o | Z_o
        auto vcoord = [&](std::size_t i) { return i < a ? i : a + m1 + (i - a); };
        auto zcoord = [&](std::size_t t) { return t < m1 ? a + t : a + m1 + b + (t - m1); };

        auto table = LieSuperalgebra::zero_table(d);
        bool nonzero = false;
        for (std::size_t i = 0; i < a + b; ++i)
            for (std::size_t j = i; j < a + b; ++j) {
                const bool i_even = i < a, j_even = j < a;
                if (i == j && i_even)
                    continue;  // [x,x] = 0
                const bool even_target = i_even == j_even;
                const std::size_t lo = even_target ? 0 : m1;
                const std::size_t hi = even_target ? m1 : m1 + n1;
                Vec val(m1 + n1);
                bool any = false;
                if (rng.chance(3, 5))
                    for (std::size_t t = lo; t < hi; ++t) {
                        val[t] = rng.small_rational();
                        any = any || !val[t].is_zero();
                    }
                if (!any)
                    continue;
                nonzero = true;
                Vec& fwd = table[vcoord(i) * n + vcoord(j)];
                Vec& bwd = table[vcoord(j) * n + vcoord(i)];
                const bool both_odd = !i_even && !j_even;
                for (std::size_t t = lo; t < hi; ++t)
                    if (!val[t].is_zero()) {
                        fwd[zcoord(t)] = val[t];
                        if (i != j)
                            bwd[zcoord(t)] = both_odd ? val[t] : -val[t];
                    }
            }
        if (!nonzero)
            continue;  // class 2 needs L² ≠ 0
        return LieSuperalgebra(d, {}, std::move(table));
    }
}

}  // namespace superder

#endif
