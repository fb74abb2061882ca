/**
 * @file cayley.hpp
 * @brief Quaternions, octonions (Cayley algebra) and the C + C^3 split.
 *
 * Octonions are built by doubling H: (a + b e4)(c + d e4) = (ac - conj(d) b) + (da + b conj(c)) e4,
 * with e5 = e1 e4, e6 = e2 e4, e7 = e3 e4 and e1 e2 = e3 on H. Coefficients
 * lie in the field F, so the same types model both the real algebra and its
 * complexification.
 */
#pragma once

#include "z3z3/scalar.hpp"

#include <array>
#include <stdexcept>

namespace z3z3 {

template <class F>
struct Quaternion {
    std::array<F, 4> c{};  // on 1, e1, e2, e3

    Quaternion() = default;
    Quaternion(F a0, F a1, F a2, F a3) : c{a0, a1, a2, a3} {}
    static Quaternion scalar(F a) { return {a, F(0), F(0), F(0)}; }

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
        return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
    }
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
        return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
    }
    Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        const auto& a = x.c;
        const auto& b = y.c;
        return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    }
    friend Quaternion operator*(const F& s, const Quaternion& x) {
        return {s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]};
    }
    friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.c == y.c; }
    friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

    /// Quaternion conjugation (C-linear: does not touch coefficients).
    [[nodiscard]] Quaternion bar() const { return {c[0], -c[1], -c[2], -c[3]}; }
    /// Field conjugation of the coefficients.
    [[nodiscard]] Quaternion tau() const { return {c[0].conj(), c[1].conj(), c[2].conj(), c[3].conj()}; }
    [[nodiscard]] F norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
    [[nodiscard]] bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }
    [[nodiscard]] bool is_real() const {
        return c[0].is_real() && c[1].is_real() && c[2].is_real() && c[3].is_real();
    }
};

/// Element re + im e1 of the subalgebra C = span{1, e1}.
template <class F>
struct Cx {
    F re{}, im{};

    Cx() = default;
    Cx(F r, F i) : re(std::move(r)), im(std::move(i)) {}
    static Cx scalar(F a) { return {a, F(0)}; }

    friend Cx operator+(const Cx& x, const Cx& y) { return {x.re + y.re, x.im + y.im}; }
    friend Cx operator-(const Cx& x, const Cx& y) { return {x.re - y.re, x.im - y.im}; }
    Cx operator-() const { return {-re, -im}; }
    friend Cx operator*(const Cx& x, const Cx& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Cx operator*(const F& s, const Cx& x) { return {s * x.re, s * x.im}; }
    friend bool operator==(const Cx& x, const Cx& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const Cx& x, const Cx& y) { return !(x == y); }

    /// conjugation in e1 (negates the e1 coordinate)
    [[nodiscard]] Cx bar() const { return {re, -im}; }
    /// field conjugation of both coordinates
    [[nodiscard]] Cx tau() const { return {re.conj(), im.conj()}; }
    [[nodiscard]] F norm() const { return re * re + im * im; }
    [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }
    [[nodiscard]] bool is_real() const { return re.is_real() && im.is_real(); }
    [[nodiscard]] Cx inv() const {
        F n = norm().inv();
        return {re * n, -(im * n)};
    }
};

namespace detail {

struct OctTable {
    // e_a e_b = sign[a][b] * e_{index[a][b]}
    int index[8][8];
    int sign[8][8];

    OctTable() {
        // integer quaternion basis products
        auto qmul = [](int a, int b, int& s) {
            static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
            s = sg[a][b];
            return idx[a][b];
        };
        auto qbar = [](int a) { return a == 0 ? 1 : -1; };
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                int s = 1, k = 0;
                if (a < 4 && b < 4) {
                    k = qmul(a, b, s);
                } else if (a < 4) {  // (q_a, 0)(0, q_j) = (0, q_j q_a)
                    k = 4 + qmul(b - 4, a, s);
                } else if (b < 4) {  // (0, q_i)(q_b, 0) = (0, q_i conj(q_b))
                    k = 4 + qmul(a - 4, b, s);
                    s *= qbar(b);
                } else {             // (0, q_i)(0, q_j) = (-conj(q_j) q_i, 0)
                    k = qmul(b - 4, a - 4, s);
                    s *= -qbar(b - 4);
                }
                index[a][b] = k;
                sign[a][b] = s;
            }
    }

    static const OctTable& get() {
        static const OctTable t;
        return t;
    }
};

}  // namespace detail

template <class F>
struct Octonion {
    std::array<F, 8> c{};  // on e0 = 1, e1, ..., e7

    Octonion() = default;
    static Octonion basis(int k) {
        Octonion o;
        o.c.at(size_t(k)) = F(1);
        return o;
    }
    static Octonion scalar(F a) {
        Octonion o;
        o.c[0] = std::move(a);
        return o;
    }
    static Octonion from_quaternions(const Quaternion<F>& a, const Quaternion<F>& b) {
        Octonion o;
        for (int k = 0; k < 4; ++k) { o.c[k] = a.c[k]; o.c[4 + k] = b.c[k]; }
        return o;
    }
    [[nodiscard]] Quaternion<F> first() const { return {c[0], c[1], c[2], c[3]}; }
    [[nodiscard]] Quaternion<F> second() const { return {c[4], c[5], c[6], c[7]}; }

    friend Octonion operator+(const Octonion& x, const Octonion& y) {
        Octonion z;
        for (int k = 0; k < 8; ++k) z.c[k] = x.c[k] + y.c[k];
        return z;
    }
    friend Octonion operator-(const Octonion& x, const Octonion& y) {
        Octonion z;
        for (int k = 0; k < 8; ++k) z.c[k] = x.c[k] - y.c[k];
        return z;
    }
    Octonion operator-() const {
        Octonion z;
        for (int k = 0; k < 8; ++k) z.c[k] = -c[k];
        return z;
    }
    friend Octonion operator*(const F& s, const Octonion& x) {
        Octonion z;
        for (int k = 0; k < 8; ++k) z.c[k] = s * x.c[k];
        return z;
    }
    friend Octonion operator*(const Octonion& x, const Octonion& y) {
        const auto& t = detail::OctTable::get();
        Octonion z;
        for (int a = 0; a < 8; ++a) {
            if (x.c[a].is_zero()) continue;
            for (int b = 0; b < 8; ++b) {
                if (y.c[b].is_zero()) continue;
                F p = x.c[a] * y.c[b];
                int k = t.index[a][b];
                if (t.sign[a][b] > 0) z.c[k] += p;
                else z.c[k] -= p;
            }
        }
        return z;
    }
    friend bool operator==(const Octonion& x, const Octonion& y) { return x.c == y.c; }
    friend bool operator!=(const Octonion& x, const Octonion& y) { return !(x == y); }

    /// octonion conjugation: negates e1..e7, leaves coefficients alone
    [[nodiscard]] Octonion bar() const {
        Octonion z = -*this;
        z.c[0] = c[0];
        return z;
    }
    [[nodiscard]] Octonion tau() const {
        Octonion z;
        for (int k = 0; k < 8; ++k) z.c[k] = c[k].conj();
        return z;
    }
    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    [[nodiscard]] bool is_real() const {
        for (const auto& x : c)
            if (!x.is_real()) return false;
        return true;
    }
};

template <class F>
Octonion<F> oct_mul(const Octonion<F>& x, const Octonion<F>& y) { return x * y; }

template <class F>
Octonion<F> oct_conj(const Octonion<F>& x) { return x.bar(); }

/// Symmetric bilinear form with (e_i, e_j) = delta_ij.
template <class F>
F oct_inner(const Octonion<F>& x, const Octonion<F>& y) {
    F s(0);
    for (int k = 0; k < 8; ++k)
        if (!x.c[k].is_zero() && !y.c[k].is_zero()) s += x.c[k] * y.c[k];
    return s;
}

template <class F>
F oct_norm(const Octonion<F>& x) { return oct_inner(x, x); }

/// m0 + m1 e2 + m2 e4 + m3 e6 with m_k in C = span{1, e1}.
template <class F>
struct SplitCayley {
    Cx<F> m0;
    std::array<Cx<F>, 3> m;

    friend bool operator==(const SplitCayley& x, const SplitCayley& y) { return x.m0 == y.m0 && x.m == y.m; }
};

// The product reading of m3 e6 gives (a + b e1) e6 = a e6 - b e7.
template <class F>
SplitCayley<F> to_split(const Octonion<F>& x) {
    return {{x.c[0], x.c[1]}, {{{x.c[2], x.c[3]}, {x.c[4], x.c[5]}, {x.c[6], -x.c[7]}}}};
}

template <class F>
Octonion<F> from_split(const SplitCayley<F>& s) {
    Octonion<F> x;
    x.c[0] = s.m0.re;
    x.c[1] = s.m0.im;
    x.c[2] = s.m[0].re;
    x.c[3] = s.m[0].im;
    x.c[4] = s.m[1].re;
    x.c[5] = s.m[1].im;
    x.c[6] = s.m[2].re;
    x.c[7] = -s.m[2].im;
    return x;
}

/// Product in the split model: (m0+m)(n0+n) = (m0 n0 - <m,n>) + (m0 n + conj(n0) m + conj(m x n)),
/// <m,n> = sum m_k conj(n_k) and m x n the usual cross product.
template <class F>
SplitCayley<F> split_mul(const SplitCayley<F>& x, const SplitCayley<F>& y) {
    const auto& m = x.m;
    const auto& n = y.m;
    Cx<F> herm = m[0] * n[0].bar() + m[1] * n[1].bar() + m[2] * n[2].bar();
    std::array<Cx<F>, 3> cr = {m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2], m[0] * n[1] - m[1] * n[0]};
    SplitCayley<F> r;
    r.m0 = x.m0 * y.m0 - herm;
    for (int k = 0; k < 3; ++k) r.m[k] = x.m0 * n[k] + y.m0.bar() * m[k] + cr[k].bar();
    return r;
}

}  // namespace z3z3
