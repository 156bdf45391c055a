#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dold/polynomial.hpp"
#include "dold/types.hpp"

namespace dold {

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("Matrix: dimension mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const T& x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("Matrix: dimension mismatch in sum");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    T trace() const {
        if (!is_square()) throw DomainError("Matrix: trace of non-square matrix");
        T t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_skew() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    template <typename F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
    return m.map([](const Integer& x) { return Rational(x); });
}

/// Converts back to integers; throws ConstructionError on a non-integral entry.
inline IntMatrix to_integer(const RationalMatrix& m, const char* context = "to_integer") {
    return m.map([context](const Rational& x) {
        if (!is_integral(x)) throw ConstructionError(std::string(context) + ": non-integral entry " + to_string(x));
        return Integer(boost::multiprecision::numerator(x));
    });
}

/// Inverse by Gauss-Jordan elimination over the rationals.
inline RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw DomainError("inverse: non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m, inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw DomainError("inverse: singular matrix");
        a.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// det(xI - A) by the division-free Samuelson-Berkowitz recursion over the
/// trailing principal submatrices.
inline IntPolynomial char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw DomainError("char_poly: non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return IntPolynomial{1};
    // p holds coefficients from the leading one down: p[0] x^m + p[1] x^{m-1} + ...
    std::vector<Integer> p{1, -a(n - 1, n - 1)};
    for (std::size_t i = n - 1; i-- > 0;) {
        const std::size_t m = n - 1 - i;  // size of the trailing block
        // q = (1, -a_ii, -R C, -R S C, -R S^2 C, ...), S the trailing block.
        std::vector<Integer> q(m + 2);
        q[0] = 1;
        q[1] = -a(i, i);
        std::vector<Integer> v(m);  // S^j C
        for (std::size_t r = 0; r < m; ++r) v[r] = a(i + 1 + r, i);
        for (std::size_t j = 0; j < m; ++j) {
            Integer dot = 0;
            for (std::size_t r = 0; r < m; ++r) dot += a(i, i + 1 + r) * v[r];
            q[j + 2] = -dot;
            if (j + 1 == m) break;
            std::vector<Integer> w(m);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) w[r] += a(i + 1 + r, i + 1 + c) * v[c];
            v = std::move(w);
        }
        std::vector<Integer> next(m + 2);
        for (std::size_t r = 0; r < m + 2; ++r)
            for (std::size_t c = 0; c <= std::min(r, m); ++c) next[r] += q[r - c] * p[c];
        p = std::move(next);
    }
    std::reverse(p.begin(), p.end());
    return IntPolynomial(std::move(p));
}

}  // namespace dold
