#ifndef SUPERDER_SUPERALGEBRA_HPP
#define SUPERDER_SUPERALGEBRA_HPP

#include "superder/linalg.hpp"
#include "superder/superdim.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superder {

/// Finite-dimensional Lie superalgebra given by graded structure constants.
/// Basis convention everywhere: even basis vectors first (coordinates
/// 0..even-1), then odd (even..even+odd-1). The table stores [e_i, e_j] in
/// full graded coordinates for every ordered pair; constructors are expected
/// to fill both (i,j) and (j,i). Values are immutable after construction.
class LieSuperalgebra {
public:
    LieSuperalgebra(SuperDim sdim, std::vector<std::string> names, std::vector<Vec> table)
        : sdim_(sdim), names_(std::move(names)), table_(std::move(table))
    {
        const std::size_t n = sdim_.total();
        if (names_.empty())
            names_ = default_names(sdim_);
        if (names_.size() != n)
            throw std::invalid_argument("LieSuperalgebra: name count != dimension");
        if (table_.size() != n * n)
            throw std::invalid_argument("LieSuperalgebra: bracket table has wrong shape");
        for (const Vec& v : table_)
            if (v.size() != n)
                throw std::invalid_argument("LieSuperalgebra: bracket entry has wrong length");
    }

    static std::vector<std::string> default_names(SuperDim d)
    {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < d.even; ++i)
            names.push_back("x" + std::to_string(i));
        for (std::size_t j = 0; j < d.odd; ++j)
            names.push_back("y" + std::to_string(j));
        return names;
    }

    static std::vector<Vec> zero_table(SuperDim d)
    {
        return std::vector<Vec>(d.total() * d.total(), Vec(d.total()));
    }

    SuperDim sdim() const { return sdim_; }
    std::size_t dim() const { return sdim_.total(); }
    Parity parity_of(std::size_t i) const { return i < sdim_.even ? Parity::even : Parity::odd; }
    const std::vector<std::string>& names() const { return names_; }

    /// [e_i, e_j] in full graded coordinates.
    const Vec& table(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b)
    {
        return a.sdim_ == b.sdim_ && a.table_ == b.table_;
    }

private:
    SuperDim sdim_;
    std::vector<std::string> names_;
    std::vector<Vec> table_;
};

enum class ElementParity { zero, even, odd, mixed };

inline ElementParity element_parity(const LieSuperalgebra& L, const Vec& v)
{
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            (L.parity_of(i) == Parity::even ? has_even : has_odd) = true;
    if (has_even && has_odd)
        return ElementParity::mixed;
    if (has_even)
        return ElementParity::even;
    if (has_odd)
        return ElementParity::odd;
    return ElementParity::zero;
}

/// Bilinear extension of the bracket table.
inline Vec bracket(const LieSuperalgebra& L, const Vec& x, const Vec& y)
{
    const std::size_t n = L.dim();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("bracket: dimension mismatch");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            vec_axpy(out, x[i] * y[j], L.table(i, j));
        }
    }
    return out;
}

/// [x, e_j]
inline Vec bracket_with_basis(const LieSuperalgebra& L, const Vec& x, std::size_t j)
{
    Vec out(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!x[i].is_zero())
            vec_axpy(out, x[i], L.table(i, j));
    return out;
}

/// [e_i, x]
inline Vec bracket_basis_with(const LieSuperalgebra& L, std::size_t i, const Vec& x)
{
    Vec out(L.dim());
    for (std::size_t j = 0; j < L.dim(); ++j)
        if (!x[j].is_zero())
            vec_axpy(out, x[j], L.table(i, j));
    return out;
}

// ---------------------------------------------------------------------------
// Homogeneous subspaces
// ---------------------------------------------------------------------------

/// Homogeneous (graded) subspace of an ambient superalgebra: canonical rref
/// bases of the even and odd parts, rows in full ambient coordinates.
class Subspace {
public:
    Subspace(SuperDim ambient, Matrix even_part, Matrix odd_part)
        : ambient_(ambient), even_part_(std::move(even_part)), odd_part_(std::move(odd_part))
    {
        check_part(even_part_, Parity::even);
        check_part(odd_part_, Parity::odd);
    }

    static Subspace zero(SuperDim ambient)
    {
        return Subspace(ambient, Matrix(0, ambient.total()), Matrix(0, ambient.total()));
    }

    static Subspace full(SuperDim ambient)
    {
        const std::size_t n = ambient.total();
        Matrix ev(ambient.even, n), od(ambient.odd, n);
        for (std::size_t i = 0; i < ambient.even; ++i)
            ev(i, i) = 1;
        for (std::size_t j = 0; j < ambient.odd; ++j)
            od(j, ambient.even + j) = 1;
        return Subspace(ambient, std::move(ev), std::move(od));
    }

    /// Span of a family of vectors, split into parity components. The span
    /// must be graded (guaranteed when every input vector is homogeneous).
    static Subspace span(SuperDim ambient, const std::vector<Vec>& vectors)
    {
        const std::size_t n = ambient.total();
        std::vector<Vec> ev, od;
        for (const Vec& v : vectors) {
            Vec e(n), o(n);
            bool has_e = false, has_o = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (v[i].is_zero())
                    continue;
                if (i < ambient.even) {
                    e[i] = v[i];
                    has_e = true;
                } else {
                    o[i] = v[i];
                    has_o = true;
                }
            }
            if (has_e)
                ev.push_back(std::move(e));
            if (has_o)
                od.push_back(std::move(o));
        }
        Matrix even_m = row_space(ev, n), odd_m = row_space(od, n);
        if (even_m.rows() + odd_m.rows() != row_space(vectors, n).rows())
            throw std::invalid_argument("Subspace::span: span is not homogeneous");
        return Subspace(ambient, std::move(even_m), std::move(odd_m));
    }

    SuperDim ambient_sdim() const { return ambient_; }
    const Matrix& even_part() const { return even_part_; }
    const Matrix& odd_part() const { return odd_part_; }
    SuperDim sdim() const { return {even_part_.rows(), odd_part_.rows()}; }
    std::size_t dim() const { return sdim().total(); }

    /// Canonical rref of even and odd rows together.
    Matrix combined() const { return span_rows(stack_rows(even_part_, odd_part_)); }

    std::vector<Vec> basis_rows() const
    {
        std::vector<Vec> rows = even_part_.row_list();
        for (auto& r : odd_part_.row_list())
            rows.push_back(std::move(r));
        return rows;
    }

    bool contains_vec(const Vec& v) const { return contains(combined(), v); }

    bool contains_subspace(const Subspace& other) const
    {
        const Matrix c = combined();
        return space_contains_rows(c, other.even_part_) && space_contains_rows(c, other.odd_part_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.even_part_ == b.even_part_ && a.odd_part_ == b.odd_part_;
    }

private:
    void check_part(const Matrix& part, Parity p) const
    {
        if (part.cols() != ambient_.total())
            throw std::invalid_argument("Subspace: part width != ambient dimension");
        for (std::size_t i = 0; i < part.rows(); ++i)
            for (std::size_t j = 0; j < part.cols(); ++j) {
                const bool even_coord = j < ambient_.even;
                if (!part(i, j).is_zero() && even_coord != (p == Parity::even))
                    throw std::invalid_argument("Subspace: part has coordinates of the wrong parity");
            }
    }

    SuperDim ambient_;
    Matrix even_part_;
    Matrix odd_part_;
};

/// span{[a, b] : a basis of A, b basis of B}
inline Subspace bracket_span(const LieSuperalgebra& L, const Subspace& a, const Subspace& b)
{
    std::vector<Vec> gens;
    for (const Vec& u : a.basis_rows())
        for (const Vec& v : b.basis_rows())
            gens.push_back(bracket(L, u, v));
    return Subspace::span(L.sdim(), gens);
}

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

struct Violation {
    std::string kind;                // "grading" | "skew" | "jacobi"
    std::vector<std::size_t> tuple;  // offending basis indices
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {
inline std::string tuple_names(const LieSuperalgebra& L, const std::vector<std::size_t>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? ", " : "") + L.names()[t[i]];
    return s + ")";
}
}  // namespace detail

/// Checks grading, super skew-symmetry, and the super Jacobi identity
///   [x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]]
/// on all homogeneous basis tuples. [x,x]=0 for even x falls out of the skew
/// check; [y,[y,y]]=0 for odd y is checked explicitly (char ≠ 3 territory).
inline ValidationReport validate(const LieSuperalgebra& L)
{
    ValidationReport report;
    const std::size_t n = L.dim();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Parity want = L.parity_of(i) + L.parity_of(j);
            for (std::size_t k = 0; k < n; ++k)
                if (!L.table(i, j)[k].is_zero() && L.parity_of(k) != want) {
                    report.violations.push_back(
                        {"grading", {i, j}, "component " + L.names()[k] + " of [" + L.names()[i] + ", " + L.names()[j] + "] has the wrong parity"});
                    break;
                }
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const bool both_odd = L.parity_of(i) == Parity::odd && L.parity_of(j) == Parity::odd;
            if (i == j && both_odd)
                continue;  // [y,y] is unconstrained by skew-symmetry
            Vec lhs = L.table(i, j);
            vec_axpy(lhs, both_odd ? Rational(-1) : Rational(1), L.table(j, i));
            if (!is_zero_vec(lhs))
                report.violations.push_back({"skew", {i, j}, "super skew-symmetry fails at " + detail::tuple_names(L, {i, j})});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec res = bracket_basis_with(L, i, L.table(j, k));                     // [e_i,[e_j,e_k]]
                vec_axpy(res, Rational(-1), bracket_with_basis(L, L.table(i, j), k));  // −[[e_i,e_j],e_k]
                const bool both_odd = L.parity_of(i) == Parity::odd && L.parity_of(j) == Parity::odd;
                vec_axpy(res, both_odd ? Rational(1) : Rational(-1),
                         bracket_basis_with(L, j, L.table(i, k)));  // −(−1)^{|i||j|}[e_j,[e_i,e_k]]
                if (!is_zero_vec(res))
                    report.violations.push_back({"jacobi", {i, j, k}, "super Jacobi identity fails at " + detail::tuple_names(L, {i, j, k})});
            }

    for (std::size_t i = L.sdim().even; i < n; ++i) {
        Vec v = bracket(L, unit_vec(n, i), L.table(i, i));
        if (!is_zero_vec(v))
            report.violations.push_back({"jacobi", {i, i, i}, "[y,[y,y]] != 0 at y = " + L.names()[i]});
    }

    return report;
}

// ---------------------------------------------------------------------------
// Invariant subspaces and series
// ---------------------------------------------------------------------------

/// L² = [L, L]
inline Subspace derived_subalgebra(const LieSuperalgebra& L)
{
    const std::size_t n = L.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero_vec(L.table(i, j)))
                gens.push_back(L.table(i, j));
    return Subspace::span(L.sdim(), gens);
}

/// Z(L) = {x : [x, L] = 0}, as the kernel of x ↦ ([x, e_j])_j.
inline Subspace center(const LieSuperalgebra& L)
{
    const std::size_t n = L.dim();
    Matrix sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const Vec& c = L.table(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero())
                    sys(j * n + k, i) = c[k];
        }
    return Subspace::span(L.sdim(), kernel_basis(sys));
}

/// L¹ = L, L^{k+1} = [L^k, L]; the list ends when the series stabilizes
/// (the first repeated term is not included twice).
inline std::vector<Subspace> lower_central_series(const LieSuperalgebra& L)
{
    std::vector<Subspace> series{Subspace::full(L.sdim())};
    for (;;) {
        Subspace next = bracket_span(L, series.back(), Subspace::full(L.sdim()));
        if (next == series.back())
            return series;
        series.push_back(std::move(next));
    }
}

/// Z_0 = 0, Z_i = {x : [x, L] ⊆ Z_{i-1}}, computed as a kernel through the
/// annihilator of Z_{i-1}; ends at stabilization.
inline std::vector<Subspace> upper_central_series(const LieSuperalgebra& L)
{
    const std::size_t n = L.dim();
    std::vector<Subspace> series{Subspace::zero(L.sdim())};
    for (;;) {
        const Matrix ann = annihilator(series.back().combined());
        Matrix sys(ann.rows() * n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                const Vec& c = L.table(i, j);  // column i of (x ↦ [x, e_j])
                for (std::size_t r = 0; r < ann.rows(); ++r) {
                    Rational dot;
                    for (std::size_t k = 0; k < n; ++k)
                        if (!ann(r, k).is_zero() && !c[k].is_zero())
                            dot += ann(r, k) * c[k];
                    if (!dot.is_zero())
                        sys(j * ann.rows() + r, i) = dot;
                }
            }
        Subspace next = Subspace::span(L.sdim(), kernel_basis(sys));
        if (next == series.back())
            return series;
        series.push_back(std::move(next));
    }
}

/// Least c with L^{c+1} = 0; absent when the lower series stabilizes nonzero.
inline std::optional<std::size_t> nilpotency_class(const LieSuperalgebra& L)
{
    const auto series = lower_central_series(L);
    if (series.back().dim() != 0)
        return std::nullopt;
    return series.size() - 1;
}

inline bool is_nilpotent(const LieSuperalgebra& L) { return nilpotency_class(L).has_value(); }

/// Super-nilindex (p, q): lengths of C^k(L_0̄) and C^k(L_1̄) under
/// C^{k+1}(L_α) = [L_0̄, C^k(L_α)]. Absent if either chain stalls nonzero.
inline std::optional<SuperDim> super_nilindex(const LieSuperalgebra& L)
{
    const std::size_t n = L.dim();
    Subspace even_part = Subspace(L.sdim(), Subspace::full(L.sdim()).even_part(), Matrix(0, n));

    auto chain_length = [&](Parity alpha) -> std::optional<std::size_t> {
        Subspace c = alpha == Parity::even
                         ? Subspace(L.sdim(), Subspace::full(L.sdim()).even_part(), Matrix(0, n))
                         : Subspace(L.sdim(), Matrix(0, n), Subspace::full(L.sdim()).odd_part());
        std::size_t k = 0;
        while (c.dim() != 0) {
            Subspace next = bracket_span(L, even_part, c);
            if (next == c)
                return std::nullopt;
            c = std::move(next);
            ++k;
        }
        return k;
    };

    const auto p = chain_length(Parity::even);
    const auto q = chain_length(Parity::odd);
    if (!p || !q)
        return std::nullopt;
    return SuperDim{*p, *q};
}

// ---------------------------------------------------------------------------
// Ideals, quotients, sums
// ---------------------------------------------------------------------------

inline bool is_ideal(const LieSuperalgebra& L, const Subspace& s)
{
    const Matrix c = s.combined();
    for (const Vec& u : s.basis_rows())
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!contains(c, bracket_with_basis(L, u, j)))
                return false;
    return true;
}

inline bool is_subalgebra(const LieSuperalgebra& L, const Subspace& s)
{
    const Matrix c = s.combined();
    const auto rows = s.basis_rows();
    for (const Vec& u : rows)
        for (const Vec& v : rows)
            if (!contains(c, bracket(L, u, v)))
                return false;
    return true;
}

struct Quotient {
    LieSuperalgebra algebra;
    Matrix projection;                    // (dim L/I) × (dim L); v ↦ coordinates of v + I
    std::vector<std::size_t> complement;  // ambient coordinates representing the classes
};

/// Quotient by a homogeneous superideal. The class representatives are the
/// ambient standard basis vectors at non-pivot coordinates of I, so for the
/// model families the quotient table is literally the expected sub-table.
inline Quotient quotient(const LieSuperalgebra& L, const Subspace& ideal)
{
    if (!is_ideal(L, ideal))
        throw std::invalid_argument("quotient: subspace is not a superideal");
    const std::size_t n = L.dim();
    const Matrix c = ideal.combined();
    const RrefResult r = rref(c);

    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            complement.push_back(j);

    SuperDim qdim;
    for (auto cidx : complement)
        (L.parity_of(cidx) == Parity::even ? qdim.even : qdim.odd)++;

    const std::size_t q = complement.size();
    Matrix proj(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec red = reduce_against(c, unit_vec(n, j));
        for (std::size_t t = 0; t < q; ++t)
            proj(t, j) = red[complement[t]];
    }

    std::vector<Vec> table(q * q, Vec(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            table[a * q + b] = mat_apply(proj, L.table(complement[a], complement[b]));

    std::vector<std::string> names;
    for (auto cidx : complement)
        names.push_back(L.names()[cidx]);

    return {LieSuperalgebra(qdim, std::move(names), std::move(table)), std::move(proj), std::move(complement)};
}

/// Block-diagonal direct sum; even parts concatenated, then odd parts.
inline LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b)
{
    const SuperDim d{a.sdim().even + b.sdim().even, a.sdim().odd + b.sdim().odd};
    const std::size_t n = d.total();

    // index of a's (resp. b's) basis vector i in the sum
    auto map_a = [&](std::size_t i) { return i < a.sdim().even ? i : i + b.sdim().even; };
    auto map_b = [&](std::size_t i) { return i < b.sdim().even ? a.sdim().even + i : a.sdim().odd + a.sdim().even + i; };

    std::vector<Vec> table(n * n, Vec(n));
    auto install = [&](const LieSuperalgebra& src, auto idx_map) {
        for (std::size_t i = 0; i < src.dim(); ++i)
            for (std::size_t j = 0; j < src.dim(); ++j) {
                const Vec& v = src.table(i, j);
                Vec& out = table[idx_map(i) * n + idx_map(j)];
                for (std::size_t k = 0; k < src.dim(); ++k)
                    if (!v[k].is_zero())
                        out[idx_map(k)] = v[k];
            }
    };
    install(a, map_a);
    install(b, map_b);

    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        names[map_a(i)] = a.names()[i];
    for (std::size_t i = 0; i < b.dim(); ++i)
        names[map_b(i)] = b.names()[i];
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        names = LieSuperalgebra::default_names(d);

    return LieSuperalgebra(d, std::move(names), std::move(table));
}

/// Smallest subalgebra containing the given homogeneous generators.
inline Subspace generated_subalgebra(const LieSuperalgebra& L, const std::vector<Vec>& generators)
{
    Subspace span = Subspace::span(L.sdim(), generators);
    for (;;) {
        std::vector<Vec> gens = span.basis_rows();
        const auto rows = gens;
        for (const Vec& u : rows)
            for (const Vec& v : rows)
                gens.push_back(bracket(L, u, v));
        Subspace next = Subspace::span(L.sdim(), gens);
        if (next == span)
            return span;
        span = std::move(next);
    }
}

/// sdim(L) − sdim(L²). Only defined here for nilpotent L, where the pair is
/// unique; refused otherwise (uniqueness can fail in general).
inline SuperDim minimal_generator_pair(const LieSuperalgebra& L)
{
    if (!is_nilpotent(L))
        throw InapplicableError(
            "minimal generator pair: input is not nilpotent; the pair is only known to be unique for "
            "finite-dimensional nilpotent Lie superalgebras");
    return L.sdim() - derived_subalgebra(L).sdim();
}

}  // namespace superder

#endif
