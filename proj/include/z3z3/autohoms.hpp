/**
 * @file autohoms.hpp
 * @brief Named order-3 automorphisms, the homomorphisms onto the fixed-point
 *        subgroups, and the block embeddings used to identify the joint
 *        fixed-point groups.
 *
 * Parameter types validate their defining equations on construction, so every
 * map built here comes from a parameter that really lies in the stated group.
 */
#pragma once

#include "z3z3/groups.hpp"
#include "z3z3/models.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace z3z3 {

// ---------------------------------------------------------------- parameter types

/// Quaternion with real coefficients and q conj(q) = 1.
template <class F>
class UnitQuat {
public:
    explicit UnitQuat(Quaternion<F> q) : q_(std::move(q)) {
        if (!q_.is_real() || q_.norm() != F(1)) throw std::invalid_argument("UnitQuat: not a real unit quaternion");
    }
    static UnitQuat one() { return UnitQuat(Quaternion<F>::scalar(F(1))); }
    [[nodiscard]] const Quaternion<F>& value() const { return q_; }

private:
    Quaternion<F> q_;
};

/// Element of U(1) inside C = span{1, e1}.
template <class F>
class UnitCx {
public:
    explicit UnitCx(Cx<F> a) : a_(std::move(a)) {
        if (!a_.is_real() || a_.norm() != F(1)) throw std::invalid_argument("UnitCx: not a unit of C");
    }
    static UnitCx one() { return UnitCx(Cx<F>::scalar(F(1))); }
    [[nodiscard]] const Cx<F>& value() const { return a_; }
    [[nodiscard]] Quaternion<F> as_quat() const { return {a_.re, a_.im, F(0), F(0)}; }
    [[nodiscard]] UnitQuat<F> as_unit_quat() const { return UnitQuat<F>(as_quat()); }

private:
    Cx<F> a_;
};

/// Field element with conj(t) t = 1.
template <class F>
class UnitField {
public:
    explicit UnitField(F t) : t_(std::move(t)) {
        if (t_.conj() * t_ != F(1)) throw std::invalid_argument("UnitField: |t| != 1");
    }
    [[nodiscard]] const F& value() const { return t_; }

private:
    F t_;
};

namespace detail {

template <class T, size_t n>
using SqMat = std::array<std::array<T, n>, n>;

template <class F>
Cx<F> cx_det2(const SqMat<Cx<F>, 2>& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

template <class F>
Cx<F> cx_det3(const CMat3<F>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

template <class T, size_t n>
bool all_real(const SqMat<T, n>& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_real()) return false;
    return true;
}

template <class F>
bool cx_unitary3(const CMat3<F>& a) {
    return all_real(a) && mat3_mul(a, mat3_star(a)) == mat3_scalar(Cx<F>::scalar(F(1)));
}

template <class F>
bool cx_unitary2(const SqMat<Cx<F>, 2>& a) {
    if (!all_real(a)) return false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Cx<F> s = a[i][0] * a[j][0].bar() + a[i][1] * a[j][1].bar();
            if (s != Cx<F>::scalar(F(i == j ? 1 : 0))) return false;
        }
    return true;
}

}  // namespace detail

template <class F>
using CMat2 = detail::SqMat<Cx<F>, 2>;

/// U(2) over C = span{1, e1}.
template <class F>
class U2Cx {
public:
    explicit U2Cx(CMat2<F> a) : a_(std::move(a)) {
        if (!detail::cx_unitary2(a_)) throw std::invalid_argument("U2Cx: not unitary");
    }
    [[nodiscard]] const CMat2<F>& value() const { return a_; }

private:
    CMat2<F> a_;
};

/// U(3) over C = span{1, e1}.
template <class F>
class U3Cx {
public:
    explicit U3Cx(CMat3<F> a) : a_(std::move(a)) {
        if (!detail::cx_unitary3(a_)) throw std::invalid_argument("U3Cx: not unitary");
    }
    [[nodiscard]] const CMat3<F>& value() const { return a_; }

private:
    CMat3<F> a_;
};

/// SU(3) over C = span{1, e1}.
template <class F>
class SU3Cx {
public:
    explicit SU3Cx(CMat3<F> a) : a_(std::move(a)) {
        if (!detail::cx_unitary3(a_)) throw std::invalid_argument("SU3Cx: not unitary");
        if (detail::cx_det3(a_) != Cx<F>::scalar(F(1))) throw std::invalid_argument("SU3Cx: determinant != 1");
    }
    static SU3Cx identity() { return SU3Cx(mat3_scalar(Cx<F>::scalar(F(1)))); }
    static SU3Cx scalar(const Cx<F>& s) { return SU3Cx(mat3_scalar(s)); }
    static SU3Cx diag(const Cx<F>& a, const Cx<F>& b, const Cx<F>& c) { return SU3Cx(mat3_diag(a, b, c)); }
    [[nodiscard]] const CMat3<F>& value() const { return a_; }

private:
    CMat3<F> a_;
};

/// Sp(3): real quaternion 3x3 matrices with A A* = E.
template <class F>
class SpMat3 {
public:
    explicit SpMat3(QMat3<F> a) : a_(std::move(a)) {
        for (const auto& row : a_)
            for (const auto& q : row)
                if (!q.is_real()) throw std::invalid_argument("SpMat3: entries must be real quaternions");
        if (mat3_mul(a_, mat3_star(a_)) != mat3_scalar(Quaternion<F>::scalar(F(1))))
            throw std::invalid_argument("SpMat3: A A* != E");
    }
    static SpMat3 identity() { return SpMat3(mat3_scalar(Quaternion<F>::scalar(F(1)))); }
    [[nodiscard]] const QMat3<F>& value() const { return a_; }

private:
    QMat3<F> a_;
};

template <class F>
bool is_unitary(const Matrix<F>& a) {
    return a.rows() == a.cols() && (a * a.adjoint()).is_identity();
}

template <class F>
bool is_special_unitary(const Matrix<F>& a) { return is_unitary(a) && determinant(a) == F(1); }

/// SU(n) over the scalar field; n fixed at construction.
template <class F>
class SUMat {
public:
    SUMat(int n, Matrix<F> a) : a_(std::move(a)) {
        if (a_.rows() != n || a_.cols() != n) throw std::invalid_argument("SUMat: wrong size");
        if (!is_special_unitary(a_)) throw std::invalid_argument("SUMat: not special unitary");
    }
    [[nodiscard]] int n() const { return a_.rows(); }
    [[nodiscard]] const Matrix<F>& value() const { return a_; }

private:
    Matrix<F> a_;
};

/// Element of S(U(n1) x ... x U(nk)) inside SU(n); blocks are 0-based index sets.
template <class F>
class BlockUnitary {
public:
    BlockUnitary(std::vector<std::vector<int>> blocks, Matrix<F> a) : blocks_(std::move(blocks)), a_(std::move(a)) {
        const int n = a_.rows();
        std::vector<int> owner(size_t(n), -1);
        for (size_t b = 0; b < blocks_.size(); ++b)
            for (int i : blocks_[b]) {
                if (i < 0 || i >= n || owner[size_t(i)] >= 0)
                    throw std::invalid_argument("BlockUnitary: blocks must partition the index set");
                owner[size_t(i)] = int(b);
            }
        for (int o : owner)
            if (o < 0) throw std::invalid_argument("BlockUnitary: blocks must partition the index set");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (owner[size_t(i)] != owner[size_t(j)] && !is_zero(a_(i, j)))
                    throw std::invalid_argument("BlockUnitary: entry outside the blocks");
        if (!is_special_unitary(a_)) throw std::invalid_argument("BlockUnitary: not special unitary");
    }
    [[nodiscard]] const Matrix<F>& value() const { return a_; }
    [[nodiscard]] const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    [[nodiscard]] SUMat<F> as_su() const { return SUMat<F>(a_.rows(), a_); }

private:
    std::vector<std::vector<int>> blocks_;
    Matrix<F> a_;
};

// ---------------------------------------------------------------- field constants

template <class F>
struct Consts {
    static Quaternion<F> omega_q() { return {F(Rational(-1, 2)), K<F>::sqrt3() * K<F>::half(), F(0), F(0)}; }
    static Cx<F> omega_c() { return {F(Rational(-1, 2)), K<F>::sqrt3() * K<F>::half()}; }
    static Cx<F> one_c() { return Cx<F>::scalar(F(1)); }
    /// exp(2 pi k e1 / 36)
    static Cx<F> cis36(long long k) { return {K<F>::cos36(k), K<F>::sin36(k)}; }
    /// exp(2 pi e1 / 9)
    static Cx<F> eps() { return cis36(4); }
    static Quaternion<F> e(int k) {
        Quaternion<F> q;
        q.c.at(size_t(k)) = F(1);
        return q;
    }
};

template <class F>
Quaternion<F> cx_to_quat(const Cx<F>& a) { return {a.re, a.im, F(0), F(0)}; }

template <class F>
Octonion<F> cx_to_oct(const Cx<F>& a) {
    Octonion<F> o;
    o.c[0] = a.re;
    o.c[1] = a.im;
    return o;
}

template <class F>
QMat3<F> cx_to_qmat(const CMat3<F>& a) {
    QMat3<F> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = cx_to_quat(a[i][j]);
    return r;
}

template <class F>
Matrix<F> diag6(const std::vector<F>& d) { return Matrix<F>::diagonal(d); }

// ---------------------------------------------------------------- G2 homomorphisms

/// m + n e4 -> q m conj(q) + (p n conj(q)) e4
template <class F>
AlgMap<F> phi_g2_gamma(const UnitQuat<F>& p, const UnitQuat<F>& q) {
    const auto& P = p.value();
    const auto& Q = q.value();
    return AlgMap<F>::on_octonions([&](const Octonion<F>& x) {
        return Octonion<F>::from_quaternions(Q * x.first() * Q.bar(), P * x.second() * Q.bar());
    });
}

/// m0 + m -> m0 + A m
template <class F>
AlgMap<F> phi_g2_w3(const SU3Cx<F>& A) {
    const auto& a = A.value();
    return AlgMap<F>::on_octonions([&](const Octonion<F>& x) {
        SplitCayley<F> s = to_split(x), r{s.m0, {}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i] = r.m[i] + a[i][j] * s.m[j];
        return from_split(r);
    });
}

// ---------------------------------------------------------------- F4 homomorphisms

/// M + a -> A M A* + p a A*
template <class F>
AlgMap<F> phi_f4_gamma(const UnitQuat<F>& p, const SpMat3<F>& A) {
    const auto& P = p.value();
    const QMat3<F>& a = A.value();
    const QMat3<F> as = mat3_star(a);
    return AlgMap<F>::on_jordan([&](const JordanElem<F>& X) {
        HSplit<F> h = to_hsplit(X), r;
        r.M = mat3_mul(mat3_mul(a, h.M), as);
        for (int j = 0; j < 3; ++j) {
            Quaternion<F> s;
            for (int k = 0; k < 3; ++k) s = s + h.a[k] * as[k][j];
            r.a[j] = P * s;
        }
        return from_hsplit(r);
    });
}

/// X_C + M -> A X_C A* + B M A*
template <class F>
AlgMap<F> phi_f4_w3(const SU3Cx<F>& B, const SU3Cx<F>& A) {
    const CMat3<F>& a = A.value();
    const CMat3<F>& b = B.value();
    const CMat3<F> as = mat3_star(a);
    return AlgMap<F>::on_jordan([&](const JordanElem<F>& X) {
        CSplit<F> s = to_csplit(X), r;
        r.Xc = mat3_mul(mat3_mul(a, s.Xc), as);
        r.M = mat3_mul(mat3_mul(b, s.M), as);
        return from_csplit(r);
    });
}

/// x1 -> conj(a) x1 conj(a), x2 -> a x2, x3 -> x3 a (octonion products)
template <class F>
AlgMap<F> D(const UnitCx<F>& a) {
    const Octonion<F> o = cx_to_oct(a.value());
    const Octonion<F> ob = o.bar();
    return AlgMap<F>::on_jordan([&](const JordanElem<F>& X) {
        JordanElem<F> R = X;
        R.x[0] = (ob * X.x[0]) * ob;
        R.x[1] = o * X.x[1];
        R.x[2] = X.x[2] * o;
        return R;
    });
}

// ---------------------------------------------------------------- E6 homomorphisms

/// M + a -> k_J^-1(A k_J(M) A^t) + p a k^-1(tau A^t)
template <class F>
AlgMap<F> phi_e6_gamma(const UnitQuat<F>& p, const SUMat<F>& A) {
    if (A.n() != 6) throw std::invalid_argument("phi_e6_gamma: expects A in SU(6)");
    const auto& P = p.value();
    const Matrix<F>& a = A.value();
    const Matrix<F> at = a.transpose();
    const QMat3<F> ks = k_inv(a.adjoint());
    return AlgMap<F>::on_jordan([&](const JordanElem<F>& X) {
        HSplit<F> h = to_hsplit(X), r;
        r.M = k_J_inv(a * k_J(h.M) * at);
        for (int j = 0; j < 3; ++j) {
            Quaternion<F> s;
            for (int k = 0; k < 3; ++k) s = s + h.a[k] * ks[k][j];
            r.a[j] = P * s;
        }
        return from_hsplit(r);
    });
}

/// X_C + M -> h X_C h* + L M (tau h)*, with h = h(A, B)
template <class F>
AlgMap<F> phi_e6_w3(const SU3Cx<F>& L, const SU3Cx<F>& A, const SU3Cx<F>& B) {
    const CMat3<F> h = h_mix(A.value(), B.value());
    const CMat3<F> hs = mat3_star(h);
    const CMat3<F> ths = mat3_star(mat3_tau(h));
    const CMat3<F>& l = L.value();
    return AlgMap<F>::on_jordan([&](const JordanElem<F>& X) {
        CSplit<F> s = to_csplit(X), r;
        r.Xc = mat3_mul(mat3_mul(h, s.Xc), hs);
        r.M = mat3_mul(mat3_mul(l, s.M), ths);
        return from_csplit(r);
    });
}

/// diag(t^4, t^-2, t^-2; x1 t^-2, x2 t, x3 t) in the standard coordinates
template <class F>
AlgMap<F> phi6sigma(const UnitField<F>& theta) {
    const F& t = theta.value();
    const F tm2 = pow(t, -2), t4 = pow(t, 4);
    std::vector<F> d(kJordanDim);
    d[0] = t4;
    d[1] = d[2] = tm2;
    for (int k = 0; k < 8; ++k) {
        d[3 + k] = tm2;
        d[11 + k] = t;
        d[19 + k] = t;
    }
    return {Space::Jordan27, Matrix<F>::diagonal(d)};
}

// ---------------------------------------------------------------- named automorphisms

enum class Auto { gamma, gamma3, sigma, sigma3, w3, nu3, mu3, sigma3p, mu3p, w3p, deltaR, deltaQ, deltaN };

inline const std::vector<std::pair<Auto, std::string>>& auto_names() {
    static const std::vector<std::pair<Auto, std::string>> names = {
        {Auto::gamma, "gamma"},     {Auto::gamma3, "gamma3"}, {Auto::sigma, "sigma"},     {Auto::sigma3, "sigma3"},
        {Auto::w3, "w3"},           {Auto::nu3, "nu3"},       {Auto::mu3, "mu3"},         {Auto::sigma3p, "sigma3p"},
        {Auto::mu3p, "mu3p"},       {Auto::w3p, "w3p"},       {Auto::deltaR, "deltaR"},   {Auto::deltaQ, "deltaQ"},
        {Auto::deltaN, "deltaN"}};
    return names;
}

inline std::string auto_name(Auto a) {
    for (const auto& [k, s] : auto_names())
        if (k == a) return s;
    return "?";
}

inline Auto parse_auto(const std::string& s) {
    for (const auto& [k, n] : auto_names())
        if (n == s) return k;
    throw std::invalid_argument("unknown automorphism: " + s);
}

namespace detail {

// Signed permutation matrix: row r has entry sign at column col[r] (0-based).
template <class F>
SUMat<F> signed_perm6(const std::array<int, 6>& col, const std::array<int, 6>& sign) {
    Matrix<F> m(6, 6);
    for (int r = 0; r < 6; ++r) m(r, col[size_t(r)]) = F(sign[size_t(r)]);
    return SUMat<F>(6, m);
}

template <class F>
AlgMap<F> e6_diag(const std::vector<F>& d) {
    return phi_e6_gamma(UnitQuat<F>::one(), SUMat<F>(6, Matrix<F>::diagonal(d)));
}

template <class F>
AlgMap<F> build_auto(Auto a, Space s) {
    using C = Consts<F>;
    const F w = K<F>::omega(), wb = w.conj(), nu = K<F>::nu();
    auto cayley_only = [&](const AlgMap<F>& m) { return s == Space::Cayley8 ? m : g2_to_f4(m); };
    auto jordan_only = [&]() {
        if (s != Space::Jordan27) throw std::invalid_argument(auto_name(a) + " acts on J only");
    };
    switch (a) {
        case Auto::gamma:
            return cayley_only(AlgMap<F>::on_octonions(
                [](const Octonion<F>& x) { return Octonion<F>::from_quaternions(x.first(), -x.second()); }));
        case Auto::gamma3:
            return cayley_only(AlgMap<F>::on_octonions([](const Octonion<F>& x) {
                return Octonion<F>::from_quaternions(x.first(), C::omega_q() * x.second());
            }));
        case Auto::w3:
            return cayley_only(AlgMap<F>::on_octonions([](const Octonion<F>& x) {
                SplitCayley<F> sp = to_split(x);
                for (auto& m : sp.m) m = C::omega_c() * m;
                return from_split(sp);
            }));
        case Auto::sigma: {
            jordan_only();
            std::vector<F> d(kJordanDim, F(1));
            for (int k = 11; k < kJordanDim; ++k) d[k] = F(-1);
            return {Space::Jordan27, Matrix<F>::diagonal(d)};
        }
        case Auto::sigma3: jordan_only(); return D(UnitCx<F>(C::omega_c()));
        case Auto::nu3: {
            jordan_only();
            F nm1 = nu.inv();
            return e6_diag<F>({pow(nu, 5), nm1, nm1, nm1, nm1, nm1});
        }
        case Auto::mu3: jordan_only(); return phi6sigma(UnitField<F>(nu));
        case Auto::sigma3p: jordan_only(); return e6_diag<F>({F(1), F(1), w, w, wb, wb});
        case Auto::mu3p: {
            jordan_only();
            F n1 = nu.inv(), n2 = pow(nu, 2);
            return e6_diag<F>({n2.inv(), n2, n1, n1, nu, nu});
        }
        case Auto::w3p: jordan_only(); return e6_diag<F>({wb, wb, wb, w, w, w});
        case Auto::deltaR:
            jordan_only();
            return phi_e6_gamma(UnitQuat<F>::one(), signed_perm6<F>({0, 1, 4, 3, 2, 5}, {1, 1, 1, 1, -1, 1}));
        case Auto::deltaQ:
            jordan_only();
            return phi_e6_gamma(UnitQuat<F>::one(), signed_perm6<F>({0, 1, 2, 4, 3, 5}, {1, 1, 1, 1, -1, 1}));
        case Auto::deltaN:
            jordan_only();
            return phi_e6_gamma(UnitQuat<F>::one(), signed_perm6<F>({0, 4, 2, 3, 1, 5}, {1, 1, 1, 1, -1, 1}));
    }
    throw std::invalid_argument("unknown automorphism");
}

}  // namespace detail

/// Named automorphism, built once per (field, name, space) and shared afterwards.
template <class F>
AlgMap<F> named_auto(Auto a, Space s = Space::Jordan27) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, AlgMap<F>> cache;
    const auto key = std::make_pair(int(a), int(s));
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AlgMap<F> m = detail::build_auto<F>(a, s);
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(key, m).first->second;
}

template <class F>
AlgMap<F> named_auto(const std::string& name, Space s = Space::Jordan27) { return named_auto<F>(parse_auto(name), s); }

// ---------------------------------------------------------------- block embeddings

/// diag(p, U) in Sp(3), p in Sp(1), U in U(2) over C.
template <class F>
SpMat3<F> embed_sp1_u2(const UnitQuat<F>& p, const U2Cx<F>& U) {
    QMat3<F> m{};
    m[0][0] = p.value();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i + 1][j + 1] = cx_to_quat(U.value()[size_t(i)][size_t(j)]);
    return SpMat3<F>(m);
}

/// diag(1, 1, conj(e2)) A diag(1, 1, e2)
template <class F>
SpMat3<F> twist_e2(const SpMat3<F>& A) {
    using Q = Quaternion<F>;
    const Q one = Q::scalar(F(1)), e2 = Consts<F>::e(2);
    return SpMat3<F>(mat3_mul(mat3_mul(mat3_diag(one, one, e2.bar()), A.value()), mat3_diag(one, one, e2)));
}

/// diag(a, b, (ab)^-1) in SU(3) over C.
template <class F>
SU3Cx<F> embed_u1_u1(const UnitCx<F>& a, const UnitCx<F>& b) {
    return SU3Cx<F>::diag(a.value(), b.value(), (a.value() * b.value()).inv());
}

namespace detail {

template <class F>
void put_block(Matrix<F>& m, int at, const Matrix<F>& b, const F& scale) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(at + i, at + j) = scale * b(i, j);
}

template <class F>
const Matrix<F>& checked(const SUMat<F>& a, int n, const char* what) {
    if (a.n() != n) throw std::invalid_argument(std::string(what) + ": block has the wrong size");
    return a.value();
}

}  // namespace detail

/// diag(aA, bB, (ab)^-1 C) in S(U(2) x U(2) x U(2)).
template <class F>
BlockUnitary<F> embed_u2u2u2(const UnitField<F>& a, const UnitField<F>& b, const SUMat<F>& A, const SUMat<F>& B,
                     const SUMat<F>& C) {
    Matrix<F> m(6, 6);
    detail::put_block(m, 0, detail::checked(A, 2, "embed_u2u2u2"), a.value());
    detail::put_block(m, 2, detail::checked(B, 2, "embed_u2u2u2"), b.value());
    detail::put_block(m, 4, detail::checked(C, 2, "embed_u2u2u2"), (a.value() * b.value()).inv());
    return BlockUnitary<F>({{0, 1}, {2, 3}, {4, 5}}, m);
}

/// diag(t^-5, t T) in S(U(1) x U(5)).
template <class F>
BlockUnitary<F> embed_u1u5(const UnitField<F>& t, const SUMat<F>& T) {
    Matrix<F> m(6, 6);
    m(0, 0) = pow(t.value(), -5);
    detail::put_block(m, 1, detail::checked(T, 5, "embed_u1u5"), t.value());
    return BlockUnitary<F>({{0}, {1, 2, 3, 4, 5}}, m);
}

/// diag(a^-2, b^-2, c^-1 A, abc B) in S(U(1) x U(1) x U(2) x U(2)).
template <class F>
BlockUnitary<F> embed_u1u1u2u2(const UnitField<F>& a, const UnitField<F>& b, const UnitField<F>& c, const SUMat<F>& A,
                     const SUMat<F>& B) {
    Matrix<F> m(6, 6);
    m(0, 0) = pow(a.value(), -2);
    m(1, 1) = pow(b.value(), -2);
    detail::put_block(m, 2, detail::checked(A, 2, "embed_u1u1u2u2"), c.value().inv());
    detail::put_block(m, 4, detail::checked(B, 2, "embed_u1u1u2u2"), a.value() * b.value() * c.value());
    return BlockUnitary<F>({{0}, {1}, {2, 3}, {4, 5}}, m);
}

/// diag(aA, a^-1 B) in S(U(3) x U(3)).
template <class F>
BlockUnitary<F> embed_u3u3(const UnitField<F>& a, const SUMat<F>& A, const SUMat<F>& B) {
    Matrix<F> m(6, 6);
    detail::put_block(m, 0, detail::checked(A, 3, "embed_u3u3"), a.value());
    detail::put_block(m, 3, detail::checked(B, 3, "embed_u3u3"), a.value().inv());
    return BlockUnitary<F>({{0, 1, 2}, {3, 4, 5}}, m);
}

/// diag(a^-2 b^-3, aA, bB) in S(U(1) x U(2) x U(3)).
template <class F>
BlockUnitary<F> embed_u1u2u3(const UnitField<F>& a, const UnitField<F>& b, const SUMat<F>& A, const SUMat<F>& B) {
    Matrix<F> m(6, 6);
    m(0, 0) = pow(a.value(), -2) * pow(b.value(), -3);
    detail::put_block(m, 1, detail::checked(A, 2, "embed_u1u2u3"), a.value());
    detail::put_block(m, 3, detail::checked(B, 3, "embed_u1u2u3"), b.value());
    return BlockUnitary<F>({{0}, {1, 2}, {3, 4, 5}}, m);
}

/// psi(a, U) = D_a phi_{F4,gamma}(1, U) for U in U(3) over C.
template <class F>
AlgMap<F> psi(const UnitCx<F>& a, const U3Cx<F>& U) {
    return compose(D(a), phi_f4_gamma(UnitQuat<F>::one(), SpMat3<F>(cx_to_qmat(U.value()))));
}

}  // namespace z3z3
