#ifndef SUPERDER_TESTS_DERIVATION_ORACLE_HPP
#define SUPERDER_TESTS_DERIVATION_ORACLE_HPP

#include "superder/derivations.hpp"

#include <vector>

// Brute-force oracle, independent of the library's constraint assembly: the
// unknowns are enumerated row-major (the library goes column-major), the
// super-Leibniz defect is evaluated on ALL ordered basis pairs (the library
// prunes by skew-symmetry), and each system column is obtained by applying
// the defect to a unit matrix through the algebra's bracket operation rather
// than by indexing structure constants.
namespace oracle {

using namespace superder;

/// defect(D)(i,j) = D[e_i,e_j] − [De_i,e_j] − (−1)^{α|i|}[e_i,De_j]
inline Vec leibniz_defect(const LieSuperalgebra& L, const SuperLinearMap& d, std::size_t i, std::size_t j)
{
    const std::size_t n = L.dim();
    Vec res = d.apply(L.table(i, j));
    vec_axpy(res, Rational(-1), bracket(L, d.apply(unit_vec(n, i)), unit_vec(n, j)));
    const bool neg = d.parity == Parity::odd && L.parity_of(i) == Parity::odd;
    vec_axpy(res, neg ? Rational(1) : Rational(-1), bracket(L, unit_vec(n, i), d.apply(unit_vec(n, j))));
    return res;
}

inline bool satisfies_leibniz(const LieSuperalgebra& L, const SuperLinearMap& d)
{
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!is_zero_vec(leibniz_defect(L, d, i, j)))
                return false;
    return true;
}

inline std::vector<SuperLinearMap> brute_force_derivations(const LieSuperalgebra& L, Parity alpha)
{
    const std::size_t n = L.dim();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (row, col), row-major
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (L.parity_of(r) == L.parity_of(c) + alpha)
                unknowns.push_back({r, c});

    Matrix sys(n * n * n, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        Matrix unit(n, n);
        unit(unknowns[u].first, unknowns[u].second) = 1;
        const SuperLinearMap e{alpha, std::move(unit)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec defect = leibniz_defect(L, e, i, j);
                for (std::size_t t = 0; t < n; ++t)
                    sys((i * n + j) * n + t, u) = defect[t];
            }
    }

    std::vector<SuperLinearMap> maps;
    for (const Vec& sol : kernel_basis(sys)) {
        Matrix m(n, n);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            m(unknowns[u].first, unknowns[u].second) = sol[u];
        maps.push_back({alpha, std::move(m)});
    }
    return maps;
}

inline Matrix span_of_maps(const std::vector<SuperLinearMap>& maps, std::size_t n)
{
    std::vector<Vec> rows;
    for (const auto& m : maps)
        rows.push_back(vectorize(m.mat));
    return row_space(rows, n * n);
}

/// exact span equality between the library's solution and the brute force
inline bool spans_agree(const LieSuperalgebra& L, Parity alpha)
{
    return span_of_maps(derivation_space(L, alpha), L.dim()) ==
           span_of_maps(brute_force_derivations(L, alpha), L.dim());
}

}  // namespace oracle

#endif
