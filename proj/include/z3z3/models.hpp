/**
 * @file models.hpp
 * @brief Split models of J: J(3,H) + H^3 and J(3,C) + M(3,C), and the maps
 *        k, k_J, h that carry quaternionic / mixed data to complex matrices.
 */
#pragma once

#include "z3z3/jordan.hpp"
#include "z3z3/linalg.hpp"

#include <array>
#include <stdexcept>

namespace z3z3 {

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class F>
using QMat3 = Mat3<Quaternion<F>>;
template <class F>
using CMat3 = Mat3<Cx<F>>;
template <class F>
using CMat6 = Matrix<F>;

template <class T>
Mat3<T> mat3_mul(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
    return r;
}

/// conjugate transpose with the algebra conjugation (quaternion or e1 conjugation)
template <class T>
Mat3<T> mat3_star(const Mat3<T>& a) {
    Mat3<T> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i].bar();
    return r;
}

/// entrywise field conjugation tau
template <class T>
Mat3<T> mat3_tau(const Mat3<T>& a) {
    Mat3<T> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][j].tau();
    return r;
}

template <class T>
Mat3<T> mat3_diag(const T& a, const T& b, const T& c) {
    Mat3<T> r{};
    r[0][0] = a;
    r[1][1] = b;
    r[2][2] = c;
    return r;
}

template <class T>
Mat3<T> mat3_scalar(const T& a) { return mat3_diag(a, a, a); }

template <class T>
bool mat3_is_zero(const Mat3<T>& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

template <class T>
bool mat3_is_hermitian(const Mat3<T>& a) { return mat3_star(a) == a; }

// ---------------------------------------------------------------- J(3,H) + H^3

template <class F>
struct HSplit {
    QMat3<F> M{};                    // Hermitian
    std::array<Quaternion<F>, 3> a{};  // row vector

    friend bool operator==(const HSplit& x, const HSplit& y) { return x.M == y.M && x.a == y.a; }
};

template <class F>
QMat3<F> hermitian_from(const std::array<F, 3>& xi, const std::array<Quaternion<F>, 3>& m) {
    using Q = Quaternion<F>;
    return {{{Q::scalar(xi[0]), m[2], m[1].bar()},
             {m[2].bar(), Q::scalar(xi[1]), m[0]},
             {m[1], m[0].bar(), Q::scalar(xi[2])}}};
}

/// x_i = m_i + a_i e4
template <class F>
HSplit<F> to_hsplit(const JordanElem<F>& X) {
    HSplit<F> h;
    h.M = hermitian_from<F>(X.xi, {X.x[0].first(), X.x[1].first(), X.x[2].first()});
    for (int i = 0; i < 3; ++i) h.a[i] = X.x[i].second();
    return h;
}

template <class F>
JordanElem<F> from_hsplit(const HSplit<F>& h) {
    if (!mat3_is_hermitian(h.M)) throw std::invalid_argument("from_hsplit: matrix part not Hermitian");
    JordanElem<F> X;
    for (int i = 0; i < 3; ++i) X.xi[i] = h.M[i][i].c[0];
    X.x[0] = Octonion<F>::from_quaternions(h.M[1][2], h.a[0]);
    X.x[1] = Octonion<F>::from_quaternions(h.M[2][0], h.a[1]);
    X.x[2] = Octonion<F>::from_quaternions(h.M[0][1], h.a[2]);
    return X;
}

// ---------------------------------------------------------------- J(3,C) + M(3,C)

template <class F>
struct CSplit {
    CMat3<F> Xc{};  // Hermitian over C = span{1, e1}
    CMat3<F> M{};   // column i is the C^3 part of x_i

    friend bool operator==(const CSplit& x, const CSplit& y) { return x.Xc == y.Xc && x.M == y.M; }
};

template <class F>
CSplit<F> to_csplit(const JordanElem<F>& X) {
    using C = Cx<F>;
    CSplit<F> s;
    std::array<SplitCayley<F>, 3> sp = {to_split(X.x[0]), to_split(X.x[1]), to_split(X.x[2])};
    s.Xc = {{{C::scalar(X.xi[0]), sp[2].m0, sp[1].m0.bar()},
             {sp[2].m0.bar(), C::scalar(X.xi[1]), sp[0].m0},
             {sp[1].m0, sp[0].m0.bar(), C::scalar(X.xi[2])}}};
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < 3; ++r) s.M[r][i] = sp[i].m[r];
    return s;
}

template <class F>
JordanElem<F> from_csplit(const CSplit<F>& s) {
    if (!mat3_is_hermitian(s.Xc)) throw std::invalid_argument("from_csplit: X_C not Hermitian");
    JordanElem<F> X;
    for (int i = 0; i < 3; ++i) X.xi[i] = s.Xc[i][i].re;
    std::array<Cx<F>, 3> c0 = {s.Xc[1][2], s.Xc[2][0], s.Xc[0][1]};
    for (int i = 0; i < 3; ++i) {
        SplitCayley<F> sp{c0[i], {s.M[0][i], s.M[1][i], s.M[2][i]}};
        X.x[i] = from_split(sp);
    }
    return X;
}

// ---------------------------------------------------------------- k, k_J, h

/// 1 -> I, e1 -> diag(i,-i), e2 -> [[0,1],[-1,0]], e3 -> [[0,i],[i,0]]
template <class F>
Matrix<F> k_quat(const Quaternion<F>& q) {
    F i = K<F>::i();
    Matrix<F> m(2, 2);
    m(0, 0) = q.c[0] + i * q.c[1];
    m(1, 1) = q.c[0] - i * q.c[1];
    m(0, 1) = q.c[2] + i * q.c[3];
    m(1, 0) = i * q.c[3] - q.c[2];
    return m;
}

template <class F>
Quaternion<F> k_quat_inv(const F& a, const F& b, const F& c, const F& d) {
    F h(Rational(1, 2));
    F hi = (F(2) * K<F>::i()).inv();
    return {h * (a + d), hi * (a - d), h * (b - c), hi * (b + c)};
}

template <class F>
Matrix<F> k(const QMat3<F>& M) {
    Matrix<F> r(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Matrix<F> b = k_quat(M[i][j]);
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t) r(2 * i + s, 2 * j + t) = b(s, t);
        }
    return r;
}

/// Inverse of k; rejects matrices outside the image (blocks not of quaternion shape).
template <class F>
QMat3<F> k_inv(const Matrix<F>& R) {
    if (R.rows() != 6 || R.cols() != 6) throw std::invalid_argument("k_inv: expects a 6x6 matrix");
    QMat3<F> M{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const F &a = R(2 * i, 2 * j), &b = R(2 * i, 2 * j + 1), &c = R(2 * i + 1, 2 * j),
                    &d = R(2 * i + 1, 2 * j + 1);
            M[i][j] = k_quat_inv(a, b, c, d);
        }
    return M;
}

/// block diagonal of three [[0,1],[-1,0]]
template <class F>
Matrix<F> J6() {
    Matrix<F> j(6, 6);
    for (int b = 0; b < 3; ++b) {
        j(2 * b, 2 * b + 1) = F(1);
        j(2 * b + 1, 2 * b) = F(-1);
    }
    return j;
}

template <class F>
bool is_skew(const Matrix<F>& S) {
    for (int i = 0; i < S.rows(); ++i)
        for (int j = 0; j < S.cols(); ++j)
            if (S(i, j) != -S(j, i)) return false;
    return true;
}

/// k_J(M) = k(M) J; Hermitian input gives a skew-symmetric image.
template <class F>
Matrix<F> k_J(const QMat3<F>& M) {
    if (!mat3_is_hermitian(M)) throw std::invalid_argument("k_J: input must be Hermitian");
    return k(M) * J6<F>();
}

template <class F>
QMat3<F> k_J_inv(const Matrix<F>& S) {
    if (S.rows() != 6 || S.cols() != 6 || !is_skew(S))
        throw std::invalid_argument("k_J_inv: input must be a skew-symmetric 6x6 matrix");
    // J^-1 = -J
    QMat3<F> M = k_inv(S * (F(-1) * J6<F>()));
    if (!mat3_is_hermitian(M)) throw std::invalid_argument("k_J_inv: preimage not Hermitian");
    return M;
}

/// h(A, B) = (A + B)/2 + i (B - A) e1 / 2, entries in C^C = C (x) C
template <class F>
CMat3<F> h_mix(const CMat3<F>& A, const CMat3<F>& B) {
    F h(Rational(1, 2));
    F hi = h * K<F>::i();
    CMat3<F> r{};
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            const Cx<F>& a = A[s][t];
            const Cx<F>& b = B[s][t];
            // (b - a) e1 = -(b.im - a.im) + (b.re - a.re) e1
            Cx<F> d = b - a;
            Cx<F> de1{-d.im, d.re};
            r[s][t] = h * (a + b) + hi * de1;
        }
    return r;
}

}  // namespace z3z3
