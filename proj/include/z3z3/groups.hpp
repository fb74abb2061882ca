/**
 * @file groups.hpp
 * @brief Linear maps on the octonions (8x8) and on J^C (27x27) with exact
 *        membership predicates for G2, F4 and E6.
 *
 * Maps are immutable values. Membership results and the inverse are computed
 * at most once per value and shared between copies.
 */
#pragma once

#include "z3z3/jordan.hpp"
#include "z3z3/linalg.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace z3z3 {

enum class Space { Cayley8, Jordan27 };

inline int space_dim(Space s) { return s == Space::Cayley8 ? kCayleyDim : kJordanDim; }
inline const char* space_name(Space s) { return s == Space::Cayley8 ? "Cayley8" : "Jordan27"; }

template <class F>
class AlgMap {
    struct Cache {
        std::mutex mu;
        std::optional<bool> g2, f4, e6, invertible;
        std::shared_ptr<const Matrix<F>> inverse;
    };

public:
    AlgMap() : AlgMap(Space::Jordan27, Matrix<F>::identity(kJordanDim)) {}
    AlgMap(Space s, Matrix<F> m)
        : space_(s), m_(std::make_shared<const Matrix<F>>(std::move(m))), cache_(std::make_shared<Cache>()) {
        const int n = space_dim(s);
        if (m_->rows() != n || m_->cols() != n)
            throw std::invalid_argument(std::string("AlgMap: matrix shape does not match ") + space_name(s));
    }

    static AlgMap identity(Space s) { return {s, Matrix<F>::identity(space_dim(s))}; }

    /// Matrix of a linear map given by its action on coordinate vectors.
    static AlgMap from_function(Space s, const std::function<Vec<F>(const Vec<F>&)>& fn) {
        const int n = space_dim(s);
        Matrix<F> m(n, n);
        for (int j = 0; j < n; ++j) {
            Vec<F> e(n);
            e[j] = F(1);
            Vec<F> col = fn(e);
            if (int(col.size()) != n) throw std::invalid_argument("AlgMap::from_function: wrong image size");
            for (int i = 0; i < n; ++i) m(i, j) = col[i];
        }
        return {s, std::move(m)};
    }
    static AlgMap on_octonions(const std::function<Octonion<F>(const Octonion<F>&)>& fn) {
        return from_function(Space::Cayley8, [&](const Vec<F>& v) {
            Octonion<F> x;
            for (int k = 0; k < 8; ++k) x.c[k] = v[k];
            Octonion<F> y = fn(x);
            return Vec<F>(y.c.begin(), y.c.end());
        });
    }
    static AlgMap on_jordan(const std::function<JordanElem<F>(const JordanElem<F>&)>& fn) {
        return from_function(Space::Jordan27,
                             [&](const Vec<F>& v) { return fn(JordanElem<F>::from_vec(v)).to_vec(); });
    }

    [[nodiscard]] Space space() const { return space_; }
    [[nodiscard]] int dim() const { return space_dim(space_); }
    [[nodiscard]] const Matrix<F>& matrix() const { return *m_; }
    [[nodiscard]] const F& operator()(int i, int j) const { return (*m_)(i, j); }

    [[nodiscard]] bool invertible() const {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (!cache_->invertible) cache_->invertible = !is_zero(determinant(*m_));
        return *cache_->invertible;
    }

    /// Exact inverse, computed once; throws std::domain_error when singular.
    [[nodiscard]] const Matrix<F>& inverse_matrix() const {
        std::lock_guard<std::mutex> lk(cache_->mu);
        if (!cache_->inverse) {
            cache_->inverse = std::make_shared<const Matrix<F>>(z3z3::inverse(*m_));
            cache_->invertible = true;
        }
        return *cache_->inverse;
    }

    // Certificates are memoised here and only ever written by the predicates below.
    template <class Fn>
    bool cached(std::optional<bool> Cache::*slot, Fn compute) const {
        {
            std::lock_guard<std::mutex> lk(cache_->mu);
            if ((*cache_).*slot) return *((*cache_).*slot);
        }
        bool r = compute();
        std::lock_guard<std::mutex> lk(cache_->mu);
        (*cache_).*slot = r;
        return r;
    }
    static constexpr auto kG2 = &Cache::g2;
    static constexpr auto kF4 = &Cache::f4;
    static constexpr auto kE6 = &Cache::e6;

    friend bool operator==(const AlgMap& a, const AlgMap& b) { return a.space_ == b.space_ && *a.m_ == *b.m_; }
    friend bool operator!=(const AlgMap& a, const AlgMap& b) { return !(a == b); }

private:
    Space space_;
    std::shared_ptr<const Matrix<F>> m_;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

template <class F>
void require_same_space(const AlgMap<F>& f, const AlgMap<F>& g) {
    if (f.space() != g.space()) throw std::invalid_argument("maps act on different spaces");
}

template <class F>
Vec<F> column(const Matrix<F>& m, int j) {
    Vec<F> v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

template <class F>
bool matrix_is_real(const Matrix<F>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real()) return false;
    return true;
}

// M (sum_k c_k e_k) for a sparse combination
template <class F>
Vec<F> apply_sparse(const Matrix<F>& m, const std::vector<std::pair<int, F>>& v) {
    Vec<F> out(m.rows());
    for (const auto& [k, c] : v)
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, k).is_zero()) out[i] += m(i, k) * c;
    return out;
}

// m(e_a * e_b) == (m e_a) * (m e_b) for every basis pair, with * given by the tensor
template <class F>
bool multiplicative(const Matrix<F>& m, const Matrix<F>& lhs_map, const ProductTensor<F>& t, bool symmetric) {
    const int n = t.dim;
    std::vector<Vec<F>> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = column(m, j);
    for (int a = 0; a < n; ++a)
        for (int b = symmetric ? a : 0; b < n; ++b)
            if (apply_sparse(lhs_map, t.at(a, b)) != t.apply(cols[a], cols[b])) return false;
    return true;
}

}  // namespace detail

template <class F>
Vec<F> apply(const AlgMap<F>& f, const Vec<F>& v) {
    if (int(v.size()) != f.dim()) throw std::invalid_argument("apply: vector size does not match the map's space");
    return f.matrix() * v;
}

template <class F>
Octonion<F> apply(const AlgMap<F>& f, const Octonion<F>& x) {
    if (f.space() != Space::Cayley8) throw std::invalid_argument("apply: octonion given to a map on J");
    Vec<F> y = f.matrix() * Vec<F>(x.c.begin(), x.c.end());
    Octonion<F> r;
    for (int k = 0; k < 8; ++k) r.c[k] = y[k];
    return r;
}

template <class F>
JordanElem<F> apply(const AlgMap<F>& f, const JordanElem<F>& X) {
    if (f.space() != Space::Jordan27) throw std::invalid_argument("apply: Jordan element given to a map on octonions");
    return JordanElem<F>::from_vec(f.matrix() * X.to_vec());
}

/// f after g
template <class F>
AlgMap<F> compose(const AlgMap<F>& f, const AlgMap<F>& g) {
    detail::require_same_space(f, g);
    return {f.space(), f.matrix() * g.matrix()};
}

template <class F>
AlgMap<F> operator*(const AlgMap<F>& f, const AlgMap<F>& g) { return compose(f, g); }

template <class F>
AlgMap<F> inverse(const AlgMap<F>& f) { return {f.space(), f.inverse_matrix()}; }

template <class F>
AlgMap<F> power(const AlgMap<F>& f, long long n) {
    AlgMap<F> base = n < 0 ? inverse(f) : f;
    if (n < 0) n = -n;
    AlgMap<F> r = AlgMap<F>::identity(f.space());
    while (n) {
        if (n & 1) r = compose(r, base);
        n >>= 1;
        if (n) base = compose(base, base);
    }
    return r;
}

template <class F>
bool power_is_identity(const AlgMap<F>& f, long long n) { return power(f, n).matrix().is_identity(); }

/// g f g^-1
template <class F>
AlgMap<F> conjugate(const AlgMap<F>& g, const AlgMap<F>& f) {
    detail::require_same_space(f, g);
    return {f.space(), g.matrix() * f.matrix() * g.inverse_matrix()};
}

/// tau f tau: entrywise field conjugation of the matrix
template <class F>
AlgMap<F> tau_conjugate(const AlgMap<F>& f) { return {f.space(), f.matrix().conj()}; }

template <class F>
bool commutes(const AlgMap<F>& f, const AlgMap<F>& g) {
    detail::require_same_space(f, g);
    return f.matrix() * g.matrix() == g.matrix() * f.matrix();
}

template <class F>
bool equal(const AlgMap<F>& f, const AlgMap<F>& g) { return f == g; }

/// f = s id for some scalar s (returned through s)
template <class F>
bool is_scalar_map(const AlgMap<F>& f, F* s = nullptr) { return f.matrix().is_scalar(s); }

template <class F>
bool stabilizes(const AlgMap<F>& f, const std::vector<JordanElem<F>>& targets) {
    for (const auto& X : targets)
        if (apply(f, X) != X) return false;
    return true;
}

/// Real, invertible and multiplicative on all 64 basis pairs.
template <class F>
bool is_g2(const AlgMap<F>& f) {
    if (f.space() != Space::Cayley8) return false;
    return f.cached(AlgMap<F>::kG2, [&] {
        const auto& m = f.matrix();
        return detail::matrix_is_real(m) && f.invertible() &&
               detail::multiplicative(m, m, octonion_tensor<F>(), false);
    });
}

/// Real, invertible and multiplicative for the Jordan product on all 378 unordered basis pairs.
template <class F>
bool is_f4(const AlgMap<F>& f) {
    if (f.space() != Space::Jordan27) return false;
    return f.cached(AlgMap<F>::kF4, [&] {
        const auto& m = f.matrix();
        return detail::matrix_is_real(m) && f.invertible() && detail::multiplicative(m, m, circ_tensor<F>(), true);
    });
}

/// Invertible, preserves <X,Y> = (tau X, Y), and tau f tau (X x Y) = fX x fY on basis pairs.
template <class F>
bool is_e6(const AlgMap<F>& f) {
    if (f.space() != Space::Jordan27) return false;
    return f.cached(AlgMap<F>::kE6, [&] {
        const auto& m = f.matrix();
        const int n = kJordanDim;
        // adjoint(m) G m == G with G = diag(jordan_gram)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                F s(0);
                for (int k = 0; k < n; ++k)
                    if (!m(k, i).is_zero() && !m(k, j).is_zero()) s += F(jordan_gram(k)) * m(k, i).conj() * m(k, j);
                if (s != (i == j ? F(jordan_gram(i)) : F(0))) return false;
            }
        // preserving a nondegenerate Hermitian form already forces invertibility
        return detail::multiplicative(m, m.conj(), cross_tensor<F>(), true);
    });
}

/// Inclusion G2 -> F4: the octonion map acts on each off-diagonal entry.
template <class F>
AlgMap<F> g2_to_f4(const AlgMap<F>& a) {
    if (a.space() != Space::Cayley8) throw std::invalid_argument("g2_to_f4: expects a map on octonions");
    Matrix<F> m(kJordanDim, kJordanDim);
    for (int i = 0; i < 3; ++i) m(i, i) = F(1);
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(3 + 8 * b + i, 3 + 8 * b + j) = a(i, j);
    return {Space::Jordan27, std::move(m)};
}

}  // namespace z3z3
