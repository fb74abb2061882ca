/**
 * @file jordan.hpp
 * @brief The exceptional Jordan algebra J(3, O) and its complexification.
 *
 * Coordinates: [xi1, xi2, xi3, x1 (8), x2 (8), x3 (8)], matching the matrix
 *   [[xi1, x3, conj(x2)], [conj(x3), xi2, x1], [x2, conj(x1), xi3]].
 */
#pragma once

#include "z3z3/cayley.hpp"

#include <array>
#include <utility>
#include <vector>

namespace z3z3 {

inline constexpr int kJordanDim = 27;
inline constexpr int kCayleyDim = 8;

template <class F>
using Vec = std::vector<F>;

template <class F>
struct JordanElem {
    std::array<F, 3> xi{};
    std::array<Octonion<F>, 3> x{};

    static JordanElem E(int i) {
        JordanElem X;
        X.xi.at(size_t(i - 1)) = F(1);
        return X;
    }
    static JordanElem identity() {
        JordanElem X;
        X.xi = {F(1), F(1), F(1)};
        return X;
    }
    /// F_i(a): a in slot x_i (i = 1, 2, 3)
    static JordanElem Fi(int i, const Octonion<F>& a) {
        JordanElem X;
        X.x.at(size_t(i - 1)) = a;
        return X;
    }
    /// k-th element of the standard basis E1, E2, E3, F1(e0..e7), F2(...), F3(...)
    static JordanElem basis(int k) {
        if (k < 3) return E(k + 1);
        return Fi(1 + (k - 3) / 8, Octonion<F>::basis((k - 3) % 8));
    }

    [[nodiscard]] Vec<F> to_vec() const {
        Vec<F> v(kJordanDim);
        for (int i = 0; i < 3; ++i) v[i] = xi[i];
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 8; ++k) v[3 + 8 * i + k] = x[i].c[k];
        return v;
    }
    static JordanElem from_vec(const Vec<F>& v) {
        if (v.size() != size_t(kJordanDim)) throw std::invalid_argument("Jordan vector must have 27 entries");
        JordanElem X;
        for (int i = 0; i < 3; ++i) X.xi[i] = v[i];
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 8; ++k) X.x[i].c[k] = v[3 + 8 * i + k];
        return X;
    }

    friend JordanElem operator+(const JordanElem& a, const JordanElem& b) {
        JordanElem r;
        for (int i = 0; i < 3; ++i) { r.xi[i] = a.xi[i] + b.xi[i]; r.x[i] = a.x[i] + b.x[i]; }
        return r;
    }
    friend JordanElem operator-(const JordanElem& a, const JordanElem& b) {
        JordanElem r;
        for (int i = 0; i < 3; ++i) { r.xi[i] = a.xi[i] - b.xi[i]; r.x[i] = a.x[i] - b.x[i]; }
        return r;
    }
    friend JordanElem operator*(const F& s, const JordanElem& a) {
        JordanElem r;
        for (int i = 0; i < 3; ++i) { r.xi[i] = s * a.xi[i]; r.x[i] = s * a.x[i]; }
        return r;
    }
    friend bool operator==(const JordanElem& a, const JordanElem& b) { return a.xi == b.xi && a.x == b.x; }
    friend bool operator!=(const JordanElem& a, const JordanElem& b) { return !(a == b); }

    [[nodiscard]] F trace() const { return xi[0] + xi[1] + xi[2]; }
    /// complex conjugation tau of the complexification
    [[nodiscard]] JordanElem tau() const {
        JordanElem r;
        for (int i = 0; i < 3; ++i) { r.xi[i] = xi[i].conj(); r.x[i] = x[i].tau(); }
        return r;
    }
    [[nodiscard]] bool is_real() const { return tau() == *this; }

    using OMat = std::array<std::array<Octonion<F>, 3>, 3>;

    [[nodiscard]] OMat matrix() const {
        using O = Octonion<F>;
        return {{{O::scalar(xi[0]), x[2], x[1].bar()},
                 {x[2].bar(), O::scalar(xi[1]), x[0]},
                 {x[1], x[0].bar(), O::scalar(xi[2])}}};
    }
};

namespace detail {

// row-by-column products with left-to-right octonion multiplication
template <class F>
typename JordanElem<F>::OMat omat_mul(const typename JordanElem<F>::OMat& a, const typename JordanElem<F>::OMat& b) {
    typename JordanElem<F>::OMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

}  // namespace detail

/// X o Y = (XY + YX) / 2
template <class F>
JordanElem<F> circ(const JordanElem<F>& X, const JordanElem<F>& Y) {
    auto A = X.matrix(), B = Y.matrix();
    auto P = detail::omat_mul<F>(A, B), Q = detail::omat_mul<F>(B, A);
    F h(Rational(1, 2));
    auto s = [&](int i, int j) { return h * (P[i][j] + Q[i][j]); };
    JordanElem<F> R;
    for (int i = 0; i < 3; ++i) R.xi[i] = s(i, i).c[0];
    R.x[0] = s(1, 2);
    R.x[1] = s(2, 0);
    R.x[2] = s(0, 1);
    return R;
}

/// (X, Y) = tr(X o Y)
template <class F>
F inner(const JordanElem<F>& X, const JordanElem<F>& Y) {
    F s = X.xi[0] * Y.xi[0] + X.xi[1] * Y.xi[1] + X.xi[2] * Y.xi[2];
    for (int i = 0; i < 3; ++i) s += F(2) * oct_inner(X.x[i], Y.x[i]);
    return s;
}

/// Freudenthal product (2 X o Y - tr(X) Y - tr(Y) X + (tr X tr Y - (X, Y)) E) / 2
template <class F>
JordanElem<F> cross(const JordanElem<F>& X, const JordanElem<F>& Y) {
    F tx = X.trace(), ty = Y.trace();
    JordanElem<F> R = F(2) * circ(X, Y) - tx * Y - ty * X + (tx * ty - inner(X, Y)) * JordanElem<F>::identity();
    return F(Rational(1, 2)) * R;
}

template <class F>
F trilinear(const JordanElem<F>& X, const JordanElem<F>& Y, const JordanElem<F>& Z) {
    return inner(X, cross(Y, Z));
}

template <class F>
F det(const JordanElem<F>& X) {
    return F(Rational(1, 3)) * trilinear(X, X, X);
}

/// <X, Y> = (tau X, Y)
template <class F>
F hermitian_inner(const JordanElem<F>& X, const JordanElem<F>& Y) {
    return inner(X.tau(), Y);
}

/// Gram weights of the standard basis under (.,.): 1 on E_i, 2 on F_i(e_k).
inline int jordan_gram(int k) { return k < 3 ? 1 : 2; }

/// Sparse structure constants: prod(e_a, e_b) = sum_k coef * e_k.
template <class F>
struct ProductTensor {
    int dim = 0;
    std::vector<std::vector<std::pair<int, F>>> entries;  // index a * dim + b

    const std::vector<std::pair<int, F>>& at(int a, int b) const { return entries[size_t(a) * dim + b]; }

    /// bilinear product of coordinate vectors
    Vec<F> apply(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> out(dim);
        for (int a = 0; a < dim; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < dim; ++b) {
                if (y[b].is_zero()) continue;
                const auto& e = at(a, b);
                if (e.empty()) continue;
                F p = x[a] * y[b];
                for (const auto& [k, c] : e) out[k] += c * p;
            }
        }
        return out;
    }
};

namespace detail {

template <class F, class Op>
ProductTensor<F> build_jordan_tensor(Op op) {
    ProductTensor<F> t;
    t.dim = kJordanDim;
    t.entries.resize(size_t(kJordanDim) * kJordanDim);
    for (int a = 0; a < kJordanDim; ++a)
        for (int b = a; b < kJordanDim; ++b) {
            Vec<F> v = op(JordanElem<F>::basis(a), JordanElem<F>::basis(b)).to_vec();
            std::vector<std::pair<int, F>> e;
            for (int k = 0; k < kJordanDim; ++k)
                if (!v[k].is_zero()) e.emplace_back(k, v[k]);
            t.entries[size_t(a) * kJordanDim + b] = e;
            t.entries[size_t(b) * kJordanDim + a] = e;
        }
    return t;
}

}  // namespace detail

template <class F>
const ProductTensor<F>& circ_tensor() {
    static const ProductTensor<F> t =
        detail::build_jordan_tensor<F>([](const JordanElem<F>& a, const JordanElem<F>& b) { return circ(a, b); });
    return t;
}

template <class F>
const ProductTensor<F>& cross_tensor() {
    static const ProductTensor<F> t =
        detail::build_jordan_tensor<F>([](const JordanElem<F>& a, const JordanElem<F>& b) { return cross(a, b); });
    return t;
}

template <class F>
const ProductTensor<F>& octonion_tensor() {
    static const ProductTensor<F> t = [] {
        ProductTensor<F> r;
        r.dim = kCayleyDim;
        r.entries.resize(size_t(kCayleyDim) * kCayleyDim);
        const auto& tab = detail::OctTable::get();
        for (int a = 0; a < kCayleyDim; ++a)
            for (int b = 0; b < kCayleyDim; ++b)
                r.entries[size_t(a) * kCayleyDim + b] = {{tab.index[a][b], F(tab.sign[a][b])}};
        return r;
    }();
    return t;
}

}  // namespace z3z3
