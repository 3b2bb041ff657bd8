#pragma once

#include "z2tk/exact_arith.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace z2tk {

template <class T> using Vector = std::vector<T>;

/// Dense row-major matrix over an exact field. Zero entries are skipped in products.
template <class T> class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t k = 0; k < n; ++k)
            m(k, k) = T(1);
        return m;
    }

    static Matrix from_columns(const std::vector<Vector<T>>& cols, size_t rows) {
        Matrix m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            assert(cols[j].size() == rows);
            for (size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Vector<T> column(size_t j) const {
        Vector<T> v(rows_);
        for (size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    Vector<T> row(size_t i) const { return Vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!z2tk::is_zero(x))
                return false;
        return true;
    }

    size_t nonzero_count() const {
        size_t n = 0;
        for (const auto& x : data_)
            n += z2tk::is_zero(x) ? 0 : 1;
        return n;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        Matrix s(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    Matrix& operator+=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t k = 0; k < data_.size(); ++k)
            if (!z2tk::is_zero(o.data_[k]))
                data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t k = 0; k < data_.size(); ++k)
            if (!z2tk::is_zero(o.data_[k]))
                data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (z2tk::is_zero(aik))
                    continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!z2tk::is_zero(bkj))
                        r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
        assert(a.cols_ == v.size());
        Vector<T> r(a.rows_);
        for (size_t k = 0; k < a.cols_; ++k) {
            if (z2tk::is_zero(v[k]))
                continue;
            for (size_t i = 0; i < a.rows_; ++i)
                if (!z2tk::is_zero(a(i, k)))
                    r[i] += a(i, k) * v[k];
        }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        if (z2tk::is_zero(s))
            return r;
        for (size_t k = 0; k < data_.size(); ++k)
            if (!z2tk::is_zero(data_[k]))
                r.data_[k] = data_[k] * s;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <class F> auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                r(i, j) = f((*this)(i, j));
        return r;
    }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T> bool is_zero_vector(const Vector<T>& v) {
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

/// Reduced row-echelon basis of a row space. Pivot is the lowest-index nonzero
/// coordinate of each row; rows are sorted by pivot.
template <class T> struct Echelon {
    size_t ambient_dim = 0;
    std::vector<Vector<T>> rows;
    std::vector<size_t> pivots;

    size_t dim() const noexcept { return rows.size(); }

    /// Reduces v against the basis; the result is zero iff v lies in the span.
    Vector<T> reduce(Vector<T> v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            T f = v[pivots[r]];
            if (is_zero(f))
                continue;
            for (size_t j = pivots[r]; j < ambient_dim; ++j)
                if (!is_zero(rows[r][j]))
                    v[j] -= f * rows[r][j];
        }
        return v;
    }

    bool contains(const Vector<T>& v) const { return is_zero_vector(reduce(v)); }

    /// Adds v to the span. Returns false if v was already contained.
    bool insert(Vector<T> v) {
        v = reduce(std::move(v));
        size_t p = 0;
        while (p < ambient_dim && is_zero(v[p]))
            ++p;
        if (p == ambient_dim)
            return false;
        T inv = T(1) / v[p];
        for (size_t j = p; j < ambient_dim; ++j)
            if (!is_zero(v[j]))
                v[j] *= inv;
        // Clear the new pivot column from existing rows.
        for (auto& row : rows) {
            T f = row[p];
            if (is_zero(f))
                continue;
            for (size_t j = p; j < ambient_dim; ++j)
                if (!is_zero(v[j]))
                    row[j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p)
            ++pos;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    friend bool operator==(const Echelon& a, const Echelon& b) {
        return a.ambient_dim == b.ambient_dim && a.pivots == b.pivots && a.rows == b.rows;
    }
};

template <class T> Echelon<T> rref(const std::vector<Vector<T>>& vectors, size_t ambient_dim) {
    Echelon<T> e;
    e.ambient_dim = ambient_dim;
    for (const auto& v : vectors) {
        assert(v.size() == ambient_dim);
        e.insert(v);
    }
    return e;
}

/// Basis of the null space {x : A x = 0}.
template <class T> std::vector<Vector<T>> null_space(const Matrix<T>& a) {
    std::vector<Vector<T>> rows;
    rows.reserve(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        rows.push_back(a.row(i));
    Echelon<T> e = rref(rows, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector<T>> basis;
    for (size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector<T> x(a.cols());
        x[free] = T(1);
        for (size_t r = 0; r < e.rows.size(); ++r)
            if (!is_zero(e.rows[r][free]))
                x[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class T> size_t rank(const Matrix<T>& a) {
    std::vector<Vector<T>> rows;
    for (size_t i = 0; i < a.rows(); ++i)
        rows.push_back(a.row(i));
    return rref(rows, a.cols()).dim();
}

/// Solves A X = B for square nonsingular A; std::nullopt if A is singular.
template <class T> std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows() == a.cols() && a.rows() == b.rows());
    const size_t n = a.rows();
    std::vector<Vector<T>> rows;
    for (size_t i = 0; i < n; ++i) {
        Vector<T> r = a.row(i);
        Vector<T> rb = b.row(i);
        r.insert(r.end(), rb.begin(), rb.end());
        rows.push_back(std::move(r));
    }
    Echelon<T> e = rref(rows, n + b.cols());
    if (e.dim() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<T> x(n, b.cols());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < b.cols(); ++j)
            x(i, j) = e.rows[i][n + j];
    return x;
}

inline Matrix<GaussianRational> specialize(const Matrix<RationalFunction>& m, const GaussianRational& E0,
                                           const GaussianRational& L0) {
    return m.map([&](const RationalFunction& f) { return rf_specialize(f, E0, L0); });
}

inline Vector<GaussianRational> specialize(const Vector<RationalFunction>& v, const GaussianRational& E0,
                                           const GaussianRational& L0) {
    Vector<GaussianRational> r;
    r.reserve(v.size());
    for (const auto& x : v)
        r.push_back(rf_specialize(x, E0, L0));
    return r;
}

} // namespace z2tk
