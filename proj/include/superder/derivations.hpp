#ifndef SUPERDER_DERIVATIONS_HPP
#define SUPERDER_DERIVATIONS_HPP

#include "superder/superalgebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superder {

/// Parity-homogeneous linear endomorphism of a superalgebra. Columns are the
/// images of the ambient basis vectors in full graded coordinates. An even
/// map has zero even→odd and odd→even blocks; an odd map the complement.
struct SuperLinearMap {
    Parity parity = Parity::even;
    Matrix mat;

    Vec apply(const Vec& v) const { return mat_apply(mat, v); }

    friend bool operator==(const SuperLinearMap&, const SuperLinearMap&) = default;
};

inline bool respects_parity(const LieSuperalgebra& L, const SuperLinearMap& d)
{
    for (std::size_t k = 0; k < d.mat.rows(); ++k)
        for (std::size_t j = 0; j < d.mat.cols(); ++j)
            if (!d.mat(k, j).is_zero() && L.parity_of(k) != L.parity_of(j) + d.parity)
                return false;
    return true;
}

/// [D, E] = DE − (−1)^{|D||E|}ED
inline SuperLinearMap map_bracket(const SuperLinearMap& d, const SuperLinearMap& e)
{
    if (d.mat.rows() != e.mat.rows() || d.mat.cols() != e.mat.cols())
        throw std::invalid_argument("map_bracket: ambient mismatch");
    const bool both_odd = d.parity == Parity::odd && e.parity == Parity::odd;
    Matrix de = mat_mul(d.mat, e.mat);
    const Matrix ed = mat_mul(e.mat, d.mat);
    for (std::size_t i = 0; i < de.rows(); ++i)
        for (std::size_t j = 0; j < de.cols(); ++j) {
            if (both_odd)
                de(i, j) += ed(i, j);
            else
                de(i, j) -= ed(i, j);
        }
    return {d.parity + e.parity, std::move(de)};
}

inline Vec vectorize(const Matrix& m)
{
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.push_back(m(i, j));
    return v;
}

inline Matrix unvectorize(const Vec& v, std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = v[i * n + j];
    return m;
}

/// A graded space of parity-homogeneous maps: basis per parity plus the rref
/// of the vectorized bases for membership tests.
class GradedMapSpace {
public:
    GradedMapSpace(SuperDim ambient, std::vector<SuperLinearMap> even_basis, std::vector<SuperLinearMap> odd_basis)
        : ambient_(ambient), even_basis_(std::move(even_basis)), odd_basis_(std::move(odd_basis))
    {
        const std::size_t n = ambient_.total();
        std::vector<Vec> ev, od;
        for (const auto& m : even_basis_)
            ev.push_back(vectorize(m.mat));
        for (const auto& m : odd_basis_)
            od.push_back(vectorize(m.mat));
        even_span_ = row_space(ev, n * n);
        odd_span_ = row_space(od, n * n);
        if (even_span_.rows() != even_basis_.size() || odd_span_.rows() != odd_basis_.size())
            throw std::invalid_argument("GradedMapSpace: basis maps are linearly dependent");
    }

    SuperDim ambient_sdim() const { return ambient_; }
    const std::vector<SuperLinearMap>& even_basis() const { return even_basis_; }
    const std::vector<SuperLinearMap>& odd_basis() const { return odd_basis_; }
    SuperDim sdim() const { return {even_basis_.size(), odd_basis_.size()}; }

    bool contains_map(const SuperLinearMap& d) const
    {
        if (d.mat.is_zero())
            return true;
        return contains(d.parity == Parity::even ? even_span_ : odd_span_, vectorize(d.mat));
    }

    bool contains_space(const GradedMapSpace& other) const
    {
        return space_contains_rows(even_span_, other.even_span_) && space_contains_rows(odd_span_, other.odd_span_);
    }

    friend bool operator==(const GradedMapSpace& a, const GradedMapSpace& b)
    {
        return a.ambient_ == b.ambient_ && a.even_span_ == b.even_span_ && a.odd_span_ == b.odd_span_;
    }

private:
    SuperDim ambient_;
    std::vector<SuperLinearMap> even_basis_, odd_basis_;
    Matrix even_span_, odd_span_;
};

namespace detail {

/// Linear system whose kernel is a space of parity-α maps. Unknowns are the
/// entries of the two parity-allowed blocks, enumerated image column first:
/// (j, k) with parity(k) = parity(j)+α, j outer. The kernel basis order (and
/// hence every reported derivation basis) is inherited from the free-column
/// order of rref, so output is reproducible bit for bit.
class MapSystem {
public:
    MapSystem(const LieSuperalgebra& L, Parity alpha) : L_(L), alpha_(alpha), var_of_(L.dim() * L.dim(), SIZE_MAX)
    {
        const std::size_t n = L_.dim();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (L_.parity_of(k) == L_.parity_of(j) + alpha_) {
                    var_of_[k * n + j] = vars_.size();
                    vars_.push_back({k, j});
                }
    }

    std::size_t var_count() const { return vars_.size(); }

    /// start a fresh equation row
    void open_row() { rows_.emplace_back(var_count()); }

    void add(std::size_t row_coord, std::size_t col_coord, const Rational& coeff)
    {
        if (coeff.is_zero())
            return;
        const std::size_t v = var_of_[row_coord * L_.dim() + col_coord];
        if (v == SIZE_MAX)
            return;  // parity-forbidden entry: structurally zero
        rows_.back()[v] += coeff;
    }

    /// discard the row if it is identically zero
    void close_row()
    {
        if (is_zero_vec(rows_.back()))
            rows_.pop_back();
    }

    std::vector<SuperLinearMap> solve() const
    {
        const std::size_t n = L_.dim();
        std::vector<SuperLinearMap> maps;
        for (const Vec& sol : kernel_basis(Matrix::from_rows(rows_, var_count()))) {
            Matrix m(n, n);
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (!sol[v].is_zero())
                    m(vars_[v].first, vars_[v].second) = sol[v];
            maps.push_back({alpha_, std::move(m)});
        }
        return maps;
    }

private:
    const LieSuperalgebra& L_;
    Parity alpha_;
    std::vector<std::pair<std::size_t, std::size_t>> vars_;  // (row, col) per unknown
    std::vector<std::size_t> var_of_;
    std::vector<Vec> rows_;
};

/// Super-Leibniz constraints D[e_i,e_j] = [De_i,e_j] + (−1)^{α|i|}[e_i,De_j]
/// for i < j plus the diagonal pairs (i,i) with i odd; (i,i) for even i is
/// automatic from skew-symmetry, (j,i) with j > i is redundant.
inline void add_leibniz_rows(MapSystem& sys, const LieSuperalgebra& L, Parity alpha)
{
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i == j && L.parity_of(i) == Parity::even)
                continue;
            const Parity out = L.parity_of(i) + L.parity_of(j) + alpha;
            const bool neg = alpha == Parity::odd && L.parity_of(i) == Parity::odd;
            for (std::size_t t = 0; t < n; ++t) {
                if (L.parity_of(t) != out)
                    continue;
                sys.open_row();
                const Vec& cij = L.table(i, j);
                for (std::size_t k = 0; k < n; ++k)
                    if (!cij[k].is_zero())
                        sys.add(t, k, cij[k]);  // D([e_i,e_j]) component t
                for (std::size_t r = 0; r < n; ++r) {
                    if (L.parity_of(r) != L.parity_of(i) + alpha)
                        continue;
                    const Rational& c = L.table(r, j)[t];  // [e_r, e_j] component t
                    if (!c.is_zero())
                        sys.add(r, i, -c);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    if (L.parity_of(r) != L.parity_of(j) + alpha)
                        continue;
                    const Rational& c = L.table(i, r)[t];  // [e_i, e_r] component t
                    if (!c.is_zero())
                        sys.add(r, j, neg ? c : -c);
                }
                sys.close_row();
            }
        }
}

/// image constraints: every column of D lies in the row space `target`
inline void add_image_rows(MapSystem& sys, const LieSuperalgebra& L, Parity alpha, const Matrix& target)
{
    const Matrix ann = annihilator(target);
    const std::size_t n = L.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < ann.rows(); ++r) {
            sys.open_row();
            for (std::size_t k = 0; k < n; ++k)
                if (!ann(r, k).is_zero() && L.parity_of(k) == L.parity_of(j) + alpha)
                    sys.add(k, j, ann(r, k));
            sys.close_row();
        }
}

/// annihilation constraints: D·z = 0 for every row z of `killed`
inline void add_kill_rows(MapSystem& sys, const LieSuperalgebra& L, Parity alpha, const Matrix& killed)
{
    const std::size_t n = L.dim();
    for (std::size_t r = 0; r < killed.rows(); ++r) {
        const Vec z = killed.row(r);
        const auto zp = element_parity(L, z);
        if (zp == ElementParity::zero)
            continue;
        const Parity out = (zp == ElementParity::even ? Parity::even : Parity::odd) + alpha;
        for (std::size_t t = 0; t < n; ++t) {
            if (L.parity_of(t) != out)
                continue;
            sys.open_row();
            for (std::size_t j = 0; j < n; ++j)
                if (!z[j].is_zero())
                    sys.add(t, j, z[j]);
            sys.close_row();
        }
    }
}

}  // namespace detail

/// Superderivations of the given parity: canonical kernel basis of the
/// super-Leibniz constraint system.
inline std::vector<SuperLinearMap> derivation_space(const LieSuperalgebra& L, Parity alpha)
{
    detail::MapSystem sys(L, alpha);
    detail::add_leibniz_rows(sys, L, alpha);
    return sys.solve();
}

inline GradedMapSpace der(const LieSuperalgebra& L)
{
    return GradedMapSpace(L.sdim(), derivation_space(L, Parity::even), derivation_space(L, Parity::odd));
}

/// ID(L): superderivations with image inside L².
inline GradedMapSpace id_derivations(const LieSuperalgebra& L)
{
    const Matrix l2 = derived_subalgebra(L).combined();
    auto solve = [&](Parity alpha) {
        detail::MapSystem sys(L, alpha);
        detail::add_leibniz_rows(sys, L, alpha);
        detail::add_image_rows(sys, L, alpha, l2);
        return sys.solve();
    };
    return GradedMapSpace(L.sdim(), solve(Parity::even), solve(Parity::odd));
}

/// ID*(L): ID-superderivations vanishing on the center.
inline GradedMapSpace id_star(const LieSuperalgebra& L)
{
    const Matrix l2 = derived_subalgebra(L).combined();
    const Matrix z = center(L).combined();
    auto solve = [&](Parity alpha) {
        detail::MapSystem sys(L, alpha);
        detail::add_leibniz_rows(sys, L, alpha);
        detail::add_image_rows(sys, L, alpha, l2);
        detail::add_kill_rows(sys, L, alpha, z);
        return sys.solve();
    };
    return GradedMapSpace(L.sdim(), solve(Parity::even), solve(Parity::odd));
}

/// ad x : y ↦ [x, y]. x must be homogeneous (zero counts as even).
inline SuperLinearMap ad_map(const LieSuperalgebra& L, const Vec& x)
{
    const auto p = element_parity(L, x);
    if (p == ElementParity::mixed)
        throw std::invalid_argument("ad_map: element is not homogeneous");
    const std::size_t n = L.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec col = bracket_with_basis(L, x, j);
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = col[k];
    }
    return {p == ElementParity::odd ? Parity::odd : Parity::even, std::move(m)};
}

/// ad(L) with canonical (rref) basis per parity; sdim = sdim L − sdim Z(L).
inline GradedMapSpace ad_space(const LieSuperalgebra& L)
{
    const std::size_t n = L.dim();
    std::vector<Vec> ev, od;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec v = vectorize(ad_map(L, unit_vec(n, i)).mat);
        (L.parity_of(i) == Parity::even ? ev : od).push_back(v);
    }
    std::vector<SuperLinearMap> even_maps, odd_maps;
    const Matrix evs = row_space(ev, n * n), ods = row_space(od, n * n);
    for (std::size_t i = 0; i < evs.rows(); ++i)
        even_maps.push_back({Parity::even, unvectorize(evs.row(i), n)});
    for (std::size_t i = 0; i < ods.rows(); ++i)
        odd_maps.push_back({Parity::odd, unvectorize(ods.row(i), n)});
    return GradedMapSpace(L.sdim(), std::move(even_maps), std::move(odd_maps));
}

inline bool is_closed_under_bracket(const GradedMapSpace& s)
{
    std::vector<const SuperLinearMap*> all;
    for (const auto& m : s.even_basis())
        all.push_back(&m);
    for (const auto& m : s.odd_basis())
        all.push_back(&m);
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a; b < all.size(); ++b)
            if (!s.contains_map(map_bracket(*all[a], *all[b])))
                return false;
    return true;
}

/// Outcome of verifying ad(L) ≤ ID*(L) ≤ ID(L) ≤ Der(L) plus closure of all
/// four spaces under the derivation bracket.
struct ChainReport {
    SuperDim ad, idstar, id, der;
    bool ad_in_idstar = false, idstar_in_id = false, id_in_der = false;
    bool ad_closed = false, idstar_closed = false, id_closed = false, der_closed = false;

    bool ok() const
    {
        return ad_in_idstar && idstar_in_id && id_in_der && ad_closed && idstar_closed && id_closed && der_closed;
    }
};

inline ChainReport chain_check(const LieSuperalgebra& L)
{
    const GradedMapSpace ads = ad_space(L);
    const GradedMapSpace ids = id_star(L);
    const GradedMapSpace idd = id_derivations(L);
    const GradedMapSpace ders = der(L);
    ChainReport r;
    r.ad = ads.sdim();
    r.idstar = ids.sdim();
    r.id = idd.sdim();
    r.der = ders.sdim();
    r.ad_in_idstar = ids.contains_space(ads);
    r.idstar_in_id = idd.contains_space(ids);
    r.id_in_der = ders.contains_space(idd);
    r.ad_closed = is_closed_under_bracket(ads);
    r.idstar_closed = is_closed_under_bracket(ids);
    r.id_closed = is_closed_under_bracket(idd);
    r.der_closed = is_closed_under_bracket(ders);
    return r;
}

/// λ(K; p, q) = (p·dim K_0̄ + q·dim K_1̄, q·dim K_0̄ + p·dim K_1̄)
inline SuperDim lambda_bound(SuperDim k, std::size_t p, std::size_t q)
{
    return {p * k.even + q * k.odd, q * k.even + p * k.odd};
}

/// Minimal generator pair of L/Z(L) (requires nilpotent L).
inline SuperDim central_quotient_pair(const LieSuperalgebra& L)
{
    return minimal_generator_pair(quotient(L, center(L)).algebra);
}

struct BoundReport {
    SuperDim idstar;  // sdim ID*(L)
    SuperDim pair;    // minimal generator pair of L/Z(L)
    SuperDim bound;   // λ(L²; pair)
    bool holds = false;
    bool tight = false;
};

/// sdim ID*(L) ≤ λ(L²; p, q) with (p,q) the minimal generator pair of
/// L/Z(L). Refused for non-nilpotent inputs, where the pair is undefined.
inline BoundReport check_upper_bound(const LieSuperalgebra& L)
{
    if (!is_nilpotent(L))
        throw InapplicableError("upper bound check requires a nilpotent algebra (minimal generator pair)");
    BoundReport r;
    r.pair = central_quotient_pair(L);
    r.bound = lambda_bound(derived_subalgebra(L).sdim(), r.pair.even, r.pair.odd);
    r.idstar = id_star(L).sdim();
    r.holds = leq(r.idstar, r.bound);
    r.tight = r.idstar == r.bound;
    return r;
}

/// Quantitative form of the finite-dimension equivalence: the containment
/// sdim ad(L) ≤ sdim ID*(L) always, and ≤ λ(L²; p, q) when L is nilpotent
/// (for non-nilpotent inputs the pair is undefined and the λ leg is skipped).
inline bool check_findim_equivalence(const LieSuperalgebra& L)
{
    const SuperDim ad = ad_space(L).sdim();
    const SuperDim idstar = id_star(L).sdim();
    if (!leq(ad, idstar))
        return false;
    if (!is_nilpotent(L))
        return true;
    const SuperDim pair = central_quotient_pair(L);
    return leq(idstar, lambda_bound(derived_subalgebra(L).sdim(), pair.even, pair.odd));
}

}  // namespace superder

#endif
