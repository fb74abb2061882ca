/**
 * @file liealg.hpp
 * @brief Matrix models of g2 = Der(C), f4 = Der(J), e6 = f4 + i{T~ : tr T = 0},
 *        and exact fixed-subalgebra dimensions under inner automorphisms.
 *
 * fixed_dim never expresses g B g^-1 in basis coordinates. Each basis is
 * echelonized once to find `dim` matrix entries on which the span restricts
 * injectively; the rank of the stacked values of g B_k g^-1 - B_k at those
 * entries is then the rank of the full system, because Ad(g) preserves the
 * span (checked separately by ad_preserves_real_span).
 */
#pragma once

#include "z3z3/groups.hpp"

#include <memory>
#include <mutex>

namespace z3z3 {

enum class Algebra { g2, f4, e6 };

inline const char* algebra_name(Algebra a) { return a == Algebra::g2 ? "g2" : a == Algebra::f4 ? "f4" : "e6"; }

template <class F>
struct LieBasis {
    Space space = Space::Jordan27;
    std::vector<Matrix<F>> elems;
    /// entries (row * n + col) on which the span restricts injectively
    std::vector<int> pivots;
    /// inverse of the dim x dim matrix [B_k(pivot_r)], for coordinates
    Matrix<F> coord_inverse;

    [[nodiscard]] int dim() const { return int(elems.size()); }
};

namespace detail {

template <class F>
std::vector<F> flatten(const Matrix<F>& m) {
    std::vector<F> v(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v[size_t(i) * m.cols() + j] = m(i, j);
    return v;
}

template <class F>
typename SparseEchelon<F>::Row sparse_row(const Matrix<F>& m) {
    typename SparseEchelon<F>::Row r;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) r.emplace_back(i * m.cols() + j, m(i, j));
    return r;
}

template <class F>
void finish_basis(LieBasis<F>& b) {
    const int n = space_dim(b.space);
    std::vector<std::vector<F>> rows;
    for (const auto& e : b.elems) rows.push_back(flatten(e));
    std::vector<std::vector<F>> work = rows;
    b.pivots = row_reduce(work, n * n);
    if (int(b.pivots.size()) != b.dim()) throw std::logic_error("Lie basis is linearly dependent");
    Matrix<F> P(b.dim(), b.dim());
    for (int r = 0; r < b.dim(); ++r)
        for (int k = 0; k < b.dim(); ++k) P(r, k) = rows[size_t(k)][size_t(b.pivots[size_t(r)])];
    b.coord_inverse = inverse(P);
}

template <class F>
Matrix<F> left_mult(const JordanElem<F>& Y) {
    return AlgMap<F>::on_jordan([&](const JordanElem<F>& X) { return circ(Y, X); }).matrix();
}

}  // namespace detail

/// Derivation equations D(e_a e_b) = D(e_a) e_b + e_a D(e_b), unknown D flattened row-major.
template <class F>
std::vector<typename SparseEchelon<F>::Row> derivation_system(const ProductTensor<F>& t, bool symmetric) {
    const int n = t.dim;
    std::vector<typename SparseEchelon<F>::Row> eqs;
    for (int a = 0; a < n; ++a)
        for (int b = symmetric ? a : 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                typename SparseEchelon<F>::Row row;
                // (D(e_a e_b))_k
                for (const auto& [c, coef] : t.at(a, b)) row.emplace_back(k * n + c, coef);
                for (int i = 0; i < n; ++i) {
                    for (const auto& [kk, coef] : t.at(i, b))
                        if (kk == k) row.emplace_back(i * n + a, F(0) - coef);
                    for (const auto& [kk, coef] : t.at(a, i))
                        if (kk == k) row.emplace_back(i * n + b, F(0) - coef);
                }
                if (!row.empty()) eqs.push_back(std::move(row));
            }
    return eqs;
}

/// Nullity of the derivation system: the dimension of Der of the algebra.
template <class F>
int derivation_nullity(const ProductTensor<F>& t, bool symmetric) {
    SparseEchelon<F> ech(t.dim * t.dim);
    for (auto& r : derivation_system(t, symmetric)) ech.insert(std::move(r));
    return ech.nullity();
}

/// Der(C): nullspace of the derivation system together with skew-symmetry.
template <class F>
LieBasis<F> build_g2_basis() {
    const auto& t = octonion_tensor<F>();
    const int n = kCayleyDim;
    std::vector<std::vector<F>> dense;
    auto push = [&](const typename SparseEchelon<F>::Row& r) {
        std::vector<F> v(size_t(n) * n);
        for (const auto& [c, x] : r) v[size_t(c)] += x;
        dense.push_back(std::move(v));
    };
    for (const auto& r : derivation_system(t, false)) push(r);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) push({{i * n + j, F(1)}, {j * n + i, F(1)}});
    LieBasis<F> b;
    b.space = Space::Cayley8;
    for (const auto& v : nullspace(std::move(dense), n * n)) {
        Matrix<F> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = v[size_t(i) * n + j];
        b.elems.push_back(std::move(m));
    }
    detail::finish_basis(b);
    return b;
}

/// Inner derivations [L_X, L_Y] over basis pairs, keeping an independent subset.
template <class F>
LieBasis<F> build_f4_basis() {
    const int n = kJordanDim;
    std::vector<Matrix<F>> L;
    for (int k = 0; k < n; ++k) L.push_back(detail::left_mult(JordanElem<F>::basis(k)));
    LieBasis<F> b;
    b.space = Space::Jordan27;
    SparseEchelon<F> ech(n * n);
    for (int a = 0; a < n && b.dim() < 52; ++a)
        for (int c = a + 1; c < n && b.dim() < 52; ++c) {
            Matrix<F> m = L[size_t(a)] * L[size_t(c)] - L[size_t(c)] * L[size_t(a)];
            if (m.is_zero_matrix()) continue;
            if (ech.insert(detail::sparse_row(m))) b.elems.push_back(std::move(m));
        }
    detail::finish_basis(b);
    return b;
}

/// Traceless Jordan basis: E1 - E2, E2 - E3, F_i(e_k).
template <class F>
std::vector<JordanElem<F>> traceless_basis() {
    using J = JordanElem<F>;
    std::vector<J> out = {J::E(1) - J::E(2), J::E(2) - J::E(3)};
    for (int k = 3; k < kJordanDim; ++k) out.push_back(J::basis(k));
    return out;
}

template <class F>
LieBasis<F> build_e6_basis(const LieBasis<F>& f4) {
    LieBasis<F> b;
    b.space = Space::Jordan27;
    b.elems = f4.elems;
    const F i = K<F>::i();
    for (const auto& T : traceless_basis<F>()) b.elems.push_back(i * detail::left_mult(T));
    detail::finish_basis(b);
    return b;
}

/// Bases are built once per field type.
template <class F>
const LieBasis<F>& lie_basis(Algebra a) {
    static std::mutex mu;
    static std::unique_ptr<LieBasis<F>> g2, f4, e6;
    std::lock_guard<std::mutex> lk(mu);
    switch (a) {
        case Algebra::g2:
            if (!g2) g2 = std::make_unique<LieBasis<F>>(build_g2_basis<F>());
            return *g2;
        case Algebra::f4:
            if (!f4) f4 = std::make_unique<LieBasis<F>>(build_f4_basis<F>());
            return *f4;
        case Algebra::e6:
            if (!f4) f4 = std::make_unique<LieBasis<F>>(build_f4_basis<F>());
            if (!e6) e6 = std::make_unique<LieBasis<F>>(build_e6_basis<F>(*f4));
            return *e6;
    }
    throw std::invalid_argument("unknown algebra");
}

template <class F>
const LieBasis<F>& g2_basis() { return lie_basis<F>(Algebra::g2); }
template <class F>
const LieBasis<F>& f4_basis() { return lie_basis<F>(Algebra::f4); }
template <class F>
const LieBasis<F>& e6_basis() { return lie_basis<F>(Algebra::e6); }

/// Coordinates of M in the basis, read off the pivot entries (M must lie in the span).
template <class F>
std::vector<F> basis_coords(const LieBasis<F>& b, const Matrix<F>& M) {
    const int n = M.cols();
    std::vector<F> v(size_t(b.dim()));
    for (int r = 0; r < b.dim(); ++r) v[size_t(r)] = M(b.pivots[size_t(r)] / n, b.pivots[size_t(r)] % n);
    return b.coord_inverse * v;
}

template <class F>
bool in_span(const LieBasis<F>& b, const Matrix<F>& M) {
    std::vector<F> c = basis_coords(b, M);
    Matrix<F> s(M.rows(), M.cols());
    for (int k = 0; k < b.dim(); ++k)
        if (!is_zero(c[size_t(k)])) s = s + c[size_t(k)] * b.elems[size_t(k)];
    return s == M;
}

namespace detail {

// entries of g B g^-1 - B at the pivots, B sparse
template <class F>
std::vector<F> ad_minus_id_at_pivots(const LieBasis<F>& b, const Matrix<F>& g, const Matrix<F>& gi,
                                     const Matrix<F>& B) {
    const int n = g.rows();
    std::vector<std::pair<int, int>> nz;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (!is_zero(B(s, t))) nz.emplace_back(s, t);
    std::vector<F> out;
    out.reserve(b.pivots.size());
    for (int p : b.pivots) {
        const int r = p / n, c = p % n;
        F acc(0);
        for (const auto& [s, t] : nz) {
            if (is_zero(g(r, s)) || is_zero(gi(t, c))) continue;
            acc += g(r, s) * B(s, t) * gi(t, c);
        }
        out.push_back(acc - B(r, c));
    }
    return out;
}

template <class F>
void check_space(const LieBasis<F>& b, const AlgMap<F>& g) {
    if (g.space() != b.space) throw std::invalid_argument("fixed_dim: map and algebra act on different spaces");
}

}  // namespace detail

/// dim { D in span : g D g^-1 = D for every g in gs }.
template <class F>
int fixed_dim(const LieBasis<F>& b, const std::vector<AlgMap<F>>& gs) {
    std::vector<std::vector<F>> rows;
    for (const auto& g : gs) {
        detail::check_space(b, g);
        const Matrix<F>& gi = g.inverse_matrix();
        // column k of the block is Ad(g)B_k - B_k at the pivots
        std::vector<std::vector<F>> cols;
        for (const auto& B : b.elems) cols.push_back(detail::ad_minus_id_at_pivots(b, g.matrix(), gi, B));
        for (int r = 0; r < b.dim(); ++r) {
            std::vector<F> row(size_t(b.dim()));
            for (int k = 0; k < b.dim(); ++k) row[size_t(k)] = cols[size_t(k)][size_t(r)];
            rows.push_back(std::move(row));
        }
    }
    return b.dim() - rank(std::move(rows));
}

/// Membership-certified variant: rejects maps outside the group matching the algebra.
template <class F>
int fixed_dim(Algebra a, const std::vector<AlgMap<F>>& gs) {
    for (const auto& g : gs) {
        bool ok = a == Algebra::g2 ? is_g2(g) : a == Algebra::f4 ? is_f4(g) : is_e6(g);
        if (!ok) throw std::invalid_argument(std::string("fixed_dim: map is not in the group of ") + algebra_name(a));
    }
    return fixed_dim(lie_basis<F>(a), gs);
}

/// Fixed subspaces under the two families coincide: both dims agree with the joint dim.
template <class F>
bool same_fixed_subspace(Algebra a, const std::vector<AlgMap<F>>& x, const std::vector<AlgMap<F>>& y) {
    std::vector<AlgMap<F>> both = x;
    both.insert(both.end(), y.begin(), y.end());
    const int dx = fixed_dim(a, x), dy = fixed_dim(a, y), dxy = fixed_dim(a, both);
    return dx == dy && dy == dxy;
}

/// Ad(g) maps each basis element back into the span with conj-fixed coordinates.
template <class F>
bool ad_preserves_real_span(const LieBasis<F>& b, const AlgMap<F>& g) {
    detail::check_space(b, g);
    const Matrix<F>& gi = g.inverse_matrix();
    for (const auto& B : b.elems) {
        Matrix<F> A = g.matrix() * B * gi;
        for (const F& c : basis_coords(b, A))
            if (!c.is_real()) return false;
        if (!in_span(b, A)) return false;
    }
    return true;
}

/// (D X, Y) + (X, D Y) = 0 on all basis pairs, with the Jordan trace form.
template <class F>
bool skew_for_trace_form(const Matrix<F>& D) {
    const int n = D.rows();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (F(jordan_gram(y)) * D(y, x) + F(jordan_gram(x)) * D(x, y) != F(0)) return false;
    return true;
}

/// Infinitesimal E6 conditions: tau D tau (X x Y) + ... polarized, plus skew-Hermitian for <.,.>.
template <class F>
bool is_e6_derivation(const Matrix<F>& D) {
    const int n = D.rows();
    // skew-Hermitian: adjoint(D) G + G D = 0
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (F(jordan_gram(x)) * D(x, y) + F(jordan_gram(y)) * D(y, x).conj() != F(0)) return false;
    // conj(D)(X x Y) = DX x Y + X x DY on basis pairs
    const auto& t = cross_tensor<F>();
    const Matrix<F> Dc = D.conj();
    for (int a = 0; a < n; ++a) {
        Vec<F> da = detail::column(D, a);
        for (int b = a; b < n; ++b) {
            Vec<F> db = detail::column(D, b);
            Vec<F> ea(n), eb(n);
            ea[a] = F(1);
            eb[b] = F(1);
            Vec<F> lhs = detail::apply_sparse(Dc, t.at(a, b));
            Vec<F> r1 = t.apply(da, eb), r2 = t.apply(ea, db);
            for (int k = 0; k < n; ++k)
                if (lhs[k] != r1[k] + r2[k]) return false;
        }
    }
    return true;
}

}  // namespace z3z3
