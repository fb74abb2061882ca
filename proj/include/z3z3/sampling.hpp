/**
 * @file sampling.hpp
 * @brief Deterministic exact samples from the parameter groups.
 *
 * Every sample is a product of a few Givens rotations at angles 2 pi k / 36
 * and root-of-unity phases, so it lies in the group exactly. The generator is
 * std::mt19937_64, whose output sequence is fixed by the standard; draws use
 * only its raw output, never the implementation-defined distributions.
 */
#pragma once

#include "z3z3/autohoms.hpp"

#include <cstdint>
#include <random>

namespace z3z3 {

template <class F>
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int index(int n) { return int(rng_() % std::uint64_t(n)); }
    /// angle index in 1..35, avoiding the identity rotation
    int angle() { return 1 + index(35); }

    UnitField<F> unit_field() { return UnitField<F>(root_of_unity<F>(index(36), 36)); }
    UnitCx<F> unit_cx() { return UnitCx<F>(Consts<F>::cis36(index(36))); }

    /// product of two rotations about distinct imaginary axes
    UnitQuat<F> unit_quat() {
        const int a = 1 + index(3), b = 1 + (a + index(2)) % 3;
        return UnitQuat<F>(rot(a, angle()) * rot(b, angle()));
    }

    /// U(n) over the field: phases times two complex Givens rotations
    Matrix<F> unitary(int n) {
        std::vector<F> d(static_cast<size_t>(n));
        for (auto& x : d) x = root_of_unity<F>(index(36), 36);
        Matrix<F> m = Matrix<F>::diagonal(d);
        if (n == 1) return m;
        for (int r = 0; r < 2; ++r) m = m * givens(n);
        return m;
    }

    SUMat<F> su(int n) {
        Matrix<F> m = unitary(n);
        fix_det(m, 0);
        return SUMat<F>(n, m);
    }

    BlockUnitary<F> block(const std::vector<std::vector<int>>& blocks) {
        int n = 0;
        for (const auto& b : blocks) n += int(b.size());
        Matrix<F> m(n, n);
        for (const auto& b : blocks) {
            Matrix<F> u = unitary(int(b.size()));
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j) m(b[i], b[j]) = u(int(i), int(j));
        }
        fix_det(m, blocks.front().front());
        return BlockUnitary<F>(blocks, m);
    }

    CMat2<F> u2_raw() {
        CMat2<F> m{};
        m[0][0] = Consts<F>::cis36(index(36));
        m[1][1] = Consts<F>::cis36(index(36));
        const int k = angle();
        const Cx<F> cc = Cx<F>::scalar(K<F>::cos36(k)), ss = Cx<F>::scalar(K<F>::sin36(k));
        const Cx<F> ph = Consts<F>::cis36(index(36));
        CMat2<F> g{};
        g[0][0] = cc;
        g[0][1] = -(ss * ph.bar());
        g[1][0] = ss * ph;
        g[1][1] = cc;
        CMat2<F> r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = m[i][0] * g[0][j] + m[i][1] * g[1][j];
        return r;
    }
    U2Cx<F> u2cx() { return U2Cx<F>(u2_raw()); }

    CMat3<F> u3_raw() {
        CMat3<F> m = mat3_diag(Consts<F>::cis36(index(36)), Consts<F>::cis36(index(36)), Consts<F>::cis36(index(36)));
        for (int r = 0; r < 2; ++r) m = mat3_mul(m, givens_cx3());
        return m;
    }
    U3Cx<F> u3cx() { return U3Cx<F>(u3_raw()); }
    SU3Cx<F> su3cx() {
        CMat3<F> m = u3_raw();
        const Cx<F> d = detail::cx_det3(m).inv();
        for (auto& x : m[0]) x = d * x;
        return SU3Cx<F>(m);
    }

    SpMat3<F> sp3() {
        QMat3<F> m = mat3_diag(unit_quat().value(), unit_quat().value(), unit_quat().value());
        for (int r = 0; r < 2; ++r) {
            const int i = index(3), j = (i + 1 + index(2)) % 3;
            const int k = angle();
            const F c = K<F>::cos36(k), s = K<F>::sin36(k);
            const Quaternion<F> q = unit_quat().value();
            QMat3<F> g = mat3_scalar(Quaternion<F>::scalar(F(1)));
            g[i][i] = Quaternion<F>::scalar(c);
            g[j][j] = Quaternion<F>::scalar(c);
            g[i][j] = -(s * q.bar());
            g[j][i] = s * q;
            m = mat3_mul(m, g);
        }
        return SpMat3<F>(m);
    }

private:
    static Quaternion<F> rot(int axis, int k) {
        Quaternion<F> q = Quaternion<F>::scalar(K<F>::cos36(k));
        q.c[size_t(axis)] = K<F>::sin36(k);
        return q;
    }

    Matrix<F> givens(int n) {
        const int i = index(n), j = (i + 1 + index(n - 1)) % n;
        const int k = angle();
        const F c = K<F>::cos36(k), s = K<F>::sin36(k), ph = root_of_unity<F>(index(36), 36);
        Matrix<F> g = Matrix<F>::identity(n);
        g(i, i) = c;
        g(j, j) = c;
        g(i, j) = F(0) - s * ph.conj();
        g(j, i) = s * ph;
        return g;
    }

    CMat3<F> givens_cx3() {
        const int i = index(3), j = (i + 1 + index(2)) % 3;
        const int k = angle();
        const Cx<F> c = Cx<F>::scalar(K<F>::cos36(k)), s = Cx<F>::scalar(K<F>::sin36(k));
        const Cx<F> ph = Consts<F>::cis36(index(36));
        CMat3<F> g = mat3_scalar(Cx<F>::scalar(F(1)));
        g[i][i] = c;
        g[j][j] = c;
        g[i][j] = -(s * ph.bar());
        g[j][i] = s * ph;
        return g;
    }

    // scale row r by det^-1; the determinant of a unitary matrix is a unit
    static void fix_det(Matrix<F>& m, int r) {
        const F d = determinant(m).inv();
        for (int j = 0; j < m.cols(); ++j) m(r, j) = d * m(r, j);
    }

    std::mt19937_64 rng_;
};

/// n deterministic draws; `draw` is a Sampler member such as &Sampler<F>::unit_cx.
template <class F, class Draw>
auto sample_params(Draw draw, int n, std::uint64_t seed) {
    Sampler<F> s(seed);
    using T = decltype((s.*draw)());
    std::vector<T> out;
    out.reserve(size_t(n));
    for (int k = 0; k < n; ++k) out.push_back((s.*draw)());
    return out;
}

}  // namespace z3z3
