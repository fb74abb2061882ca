#pragma once

#include "z3z3/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace z3z3 {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
template <int N>
bool is_zero(const Cyc<N>& x) { return x.is_zero(); }

inline Rational inverse_of(const Rational& q) { return Rational(1) / q; }
template <int N>
Cyc<N> inverse_of(const Cyc<N>& x) { return x.inv(); }

inline int height_of(const Rational& q) {
    return int(mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
}
template <int N>
int height_of(const Cyc<N>& x) { return x.height(); }

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix diagonal(const std::vector<F>& d) {
        Matrix m(int(d.size()), int(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
        return m;
    }

    [[nodiscard]] int rows() const { return r_; }
    [[nodiscard]] int cols() const { return c_; }
    F& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const F& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix z(x.r_, x.c_);
        for (size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] + y.a_[k];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix z(x.r_, x.c_);
        for (size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
        return z;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix z(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                const F& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (int j = 0; j < y.c_; ++j) {
                    const F& ykj = y(k, j);
                    if (!is_zero(ykj)) z(i, j) += xik * ykj;
                }
            }
        return z;
    }
    friend Matrix operator*(const F& s, const Matrix& x) {
        Matrix z(x.r_, x.c_);
        for (size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = s * x.a_[k];
        return z;
    }
    friend std::vector<F> operator*(const Matrix& x, const std::vector<F>& v) {
        if (x.c_ != int(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<F> out(x.r_);
        for (int i = 0; i < x.r_; ++i)
            for (int j = 0; j < x.c_; ++j)
                if (!is_zero(x(i, j)) && !is_zero(v[j])) out[i] += x(i, j) * v[j];
        return out;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix z(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) z(j, i) = (*this)(i, j);
        return z;
    }
    /// Entrywise field conjugation (the tau of the complexification).
    [[nodiscard]] Matrix conj() const {
        Matrix z(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) z.a_[k] = a_[k].conj();
        return z;
    }
    [[nodiscard]] Matrix adjoint() const { return conj().transpose(); }

    [[nodiscard]] bool is_zero_matrix() const {
        return std::all_of(a_.begin(), a_.end(), [](const F& x) { return is_zero(x); });
    }
    [[nodiscard]] bool is_identity() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) {
                const F& x = (*this)(i, j);
                if (i == j ? x != F(1) : !is_zero(x)) return false;
            }
        return true;
    }
    /// true iff the matrix is s times the identity for some s
    [[nodiscard]] bool is_scalar(F* s = nullptr) const {
        if (r_ != c_ || r_ == 0) return false;
        const F& d = (*this)(0, 0);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) {
                const F& x = (*this)(i, j);
                if (i == j ? x != d : !is_zero(x)) return false;
            }
        if (s) *s = d;
        return true;
    }
    [[nodiscard]] size_t nonzeros() const {
        return size_t(std::count_if(a_.begin(), a_.end(), [](const F& x) { return !is_zero(x); }));
    }

private:
    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    int r_ = 0, c_ = 0;
    std::vector<F> a_;
};

/// Row echelon reduction in place with smallest-height pivots; returns pivot columns.
/// Pivots are searched in columns [0, pivot_cols); all ncols columns are updated.
template <class F>
std::vector<int> row_reduce(std::vector<std::vector<F>>& m, int ncols, bool full = false, int pivot_cols = -1) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = int(m.size());
    if (pivot_cols < 0) pivot_cols = ncols;
    for (int c = 0; c < pivot_cols && r < nrows; ++c) {
        int best = -1, best_h = 0;
        for (int i = r; i < nrows; ++i) {
            if (is_zero(m[i][c])) continue;
            int h = height_of(m[i][c]);
            if (best < 0 || h < best_h) { best = i; best_h = h; }
        }
        if (best < 0) continue;
        std::swap(m[best], m[r]);
        F inv = inverse_of(m[r][c]);
        for (int j = c; j < ncols; ++j)
            if (!is_zero(m[r][j])) m[r][j] = m[r][j] * inv;
        for (int i = full ? 0 : r + 1; i < nrows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (int j = c; j < ncols; ++j)
                if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(std::vector<std::vector<F>> m) {
    if (m.empty()) return 0;
    return int(row_reduce(m, int(m[0].size())).size());
}

template <class F>
int rank(const Matrix<F>& a) {
    std::vector<std::vector<F>> m(a.rows(), std::vector<F>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return rank(std::move(m));
}

/// Basis of {x : A x = 0} for A given as rows of length ncols.
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> m, int ncols) {
    std::vector<int> piv = row_reduce(m, ncols, true);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(ncols);
        v[f] = F(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F(0) - m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

/// Exact inverse by Gauss-Jordan; throws std::domain_error when singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = a.rows();
    std::vector<std::vector<F>> m(n, std::vector<F>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = F(1);
    }
    std::vector<int> piv = row_reduce(m, 2 * n, true, n);
    if (int(piv.size()) != n) throw std::domain_error("singular matrix");
    Matrix<F> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m[i][n + j];
    return out;
}

template <class F>
F determinant(Matrix<F> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = a.rows();
    F det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return F(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = F(0) - det;
        }
        det = det * a(c, c);
        F inv = inverse_of(a(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            F f = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
    }
    return det;
}

/// Incremental sparse echelon form for large sparse systems (rank/nullity).
template <class F>
class SparseEchelon {
public:
    using Row = std::vector<std::pair<int, F>>;  // sorted by column, no zeros

    explicit SparseEchelon(int ncols) : ncols_(ncols) {}

    /// Reduces the row against the current pivots; keeps it if independent.
    bool insert(Row row) {
        normalize(row);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                F inv = inverse_of(row.front().second);
                for (auto& e : row) e.second = e.second * inv;
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            row = axpy(row, it->second, row.front().second);
        }
        return false;
    }

    [[nodiscard]] int rank() const { return int(pivots_.size()); }
    [[nodiscard]] int nullity() const { return ncols_ - rank(); }

private:
    static void normalize(Row& row) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row out;
        for (auto& e : row) {
            if (!out.empty() && out.back().first == e.first) out.back().second = out.back().second + e.second;
            else out.push_back(e);
        }
        row.clear();
        for (auto& e : out)
            if (!is_zero(e.second)) row.push_back(std::move(e));
    }
    // row - f * pivot, where pivot has leading entry 1 at row's leading column
    static Row axpy(const Row& row, const Row& pivot, const F& f) {
        Row out;
        out.reserve(row.size() + pivot.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                out.emplace_back(pivot[j].first, F(0) - f * pivot[j].second);
                ++j;
            } else {
                F v = row[i].second - f * pivot[j].second;
                if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    int ncols_;
    std::map<int, Row> pivots_;
};

}  // namespace z3z3
