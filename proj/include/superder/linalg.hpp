#ifndef SUPERDER_LINALG_HPP
#define SUPERDER_LINALG_HPP

#include "superder/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superder {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over ℚ. Immutable in spirit: every algorithm below
/// takes matrices by value/const reference and returns fresh ones.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("Matrix::from_rows: length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

    std::vector<Vec> row_list() const
    {
        std::vector<Vec> rs;
        rs.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            rs.push_back(row(i));
        return rs;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline bool is_zero_vec(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

inline void vec_axpy(Vec& y, const Rational& a, const Vec& x)
{
    if (a.is_zero())
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero())
            y[i] += a * x[i];
}

inline Vec vec_scaled(const Vec& v, const Rational& a)
{
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            w[i] = a * v[i];
    return w;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& f = a(i, k);
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += f * b(k, j);
        }
    return c;
}

inline Vec mat_apply(const Matrix& m, const Vec& v)
{
    if (m.cols() != v.size())
        throw std::invalid_argument("mat_apply: dimension mismatch");
    Vec w(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j].is_zero())
            continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero())
                w[i] += m(i, j) * v[j];
    }
    return w;
}

inline Matrix transpose(const Matrix& m)
{
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

inline Matrix stack_rows(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("stack_rows: ambient mismatch");
    const std::size_t cols = a.rows() ? a.cols() : b.cols();
    Matrix s(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            s(a.rows() + i, j) = b(i, j);
    return s;
}

struct RrefResult {
    Matrix mat;                      // reduced row echelon form, same shape as input
    std::vector<std::size_t> pivots; // pivot columns, strictly increasing
    std::size_t rank = 0;            // == pivots.size()
};

/// Gauss-Jordan over ℚ. Leading entries 1, pivot columns cleared, so the
/// output is the unique canonical RREF; subspace equality is grid equality.
inline RrefResult rref(Matrix m)
{
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols(); ++j)
                std::swap(m(r, j), m(piv, j));
        if (m(r, c) != 1) {
            const Rational inv = Rational(1) / m(r, c);
            m(r, c) = 1;
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const Rational f = m(i, c);
            m(i, c) = 0;
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = res.pivots.size();
    res.mat = std::move(m);
    return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Canonical basis of {v : m·v = 0}, one vector per free column of rref(m),
/// in increasing free-column order.
inline std::vector<Vec> kernel_basis(const Matrix& m)
{
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t t = 0; t < r.rank; ++t)
            if (!r.mat(t, f).is_zero())
                v[r.pivots[t]] = -r.mat(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Canonical rref basis of the span; zero rows dropped.
inline Matrix span_rows(const Matrix& m)
{
    RrefResult r = rref(m);
    Matrix out(r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = r.mat(i, j);
    return out;
}

inline Matrix row_space(const std::vector<Vec>& vectors, std::size_t cols)
{
    return span_rows(Matrix::from_rows(vectors, cols));
}

/// Reduce v against a space in rref; the remainder has zeros at all pivots.
inline Vec reduce_against(const Matrix& space, Vec v)
{
    if (space.cols() != v.size())
        throw std::invalid_argument("reduce_against: length mismatch");
    for (std::size_t i = 0; i < space.rows(); ++i) {
        std::size_t p = 0;
        while (p < space.cols() && space(i, p).is_zero())
            ++p;
        if (p == space.cols() || v[p].is_zero())
            continue;
        const Rational f = v[p];
        v[p] = 0;
        for (std::size_t j = p + 1; j < space.cols(); ++j)
            if (!space(i, j).is_zero())
                v[j] -= f * space(i, j);
    }
    return v;
}

/// Membership in a row space given in rref.
inline bool contains(const Matrix& space, const Vec& v)
{
    return is_zero_vec(reduce_against(space, v));
}

inline bool space_contains_rows(const Matrix& space, const Matrix& rows)
{
    for (std::size_t i = 0; i < rows.rows(); ++i)
        if (!contains(space, rows.row(i)))
            return false;
    return true;
}

inline Matrix sum_spaces(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("sum_spaces: ambient mismatch");
    return span_rows(stack_rows(a, b));
}

/// Intersection via the kernel of the stacked system A^T·α = B^T·β
/// (Zassenhaus-style): each kernel vector (α|β) yields α·A in the intersection.
inline Matrix intersect_spaces(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("intersect_spaces: ambient mismatch");
    const std::size_t n = a.cols(), k = a.rows(), l = b.rows();
    if (k == 0 || l == 0)
        return Matrix(0, n);
    Matrix sys(n, k + l);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            sys(i, j) = a(j, i);
        for (std::size_t j = 0; j < l; ++j)
            sys(i, k + j) = -b(j, i);
    }
    std::vector<Vec> members;
    for (const Vec& ab : kernel_basis(sys)) {
        Vec w(n);
        for (std::size_t j = 0; j < k; ++j)
            if (!ab[j].is_zero())
                vec_axpy(w, ab[j], a.row(j));
        members.push_back(std::move(w));
    }
    return row_space(members, n);
}

/// Rows form a constraint matrix N with N·v = 0 ⇔ v ∈ rowspace(space).
inline Matrix annihilator(const Matrix& space)
{
    return Matrix::from_rows(kernel_basis(space), space.cols());
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] >= n)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r.mat(i, n + j);
    return inv;
}

/// Coordinates of v in the row basis of `rows` (not necessarily rref), if any.
inline std::optional<Vec> coordinates_in_rows(const Matrix& rows, const Vec& v)
{
    if (rows.cols() != v.size())
        throw std::invalid_argument("coordinates_in_rows: length mismatch");
    // solve rows^T · x = v
    Matrix aug(rows.cols(), rows.rows() + 1);
    for (std::size_t i = 0; i < rows.cols(); ++i) {
        for (std::size_t j = 0; j < rows.rows(); ++j)
            aug(i, j) = rows(j, i);
        aug(i, rows.rows()) = v[i];
    }
    RrefResult r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == rows.rows())
        return std::nullopt;  // inconsistent
    Vec x(rows.rows());
    for (std::size_t t = 0; t < r.rank; ++t)
        x[r.pivots[t]] = r.mat(t, rows.rows());
    return x;
}

}  // namespace superder

#endif
