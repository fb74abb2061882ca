// Scalars, exact linear algebra, octonions, the Jordan algebra and the split models.

#include "z3z3/models.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

using namespace z3z3;
using F = CycScalar;

namespace {

// deterministic small elements of Q(zeta_36)
F sample_scalar(int k) {
    return F(k % 5 - 2) + F(Rational(k % 3 + 1, 2)) * F::zeta(k % 36) + F(k % 7) * F::zeta((5 * k) % 36);
}

Octonion<F> sample_oct(int k) {
    Octonion<F> x;
    for (int j = 0; j < 8; ++j) x.c[j] = F((3 * k + 5 * j) % 7 - 3);
    return x;
}

JordanElem<F> sample_jordan(int k) {
    JordanElem<F> X;
    for (int i = 0; i < 3; ++i) {
        X.xi[i] = F((k + 2 * i) % 5 - 2);
        X.x[i] = sample_oct(k + 11 * i);
    }
    return X;
}

// doubling formula written out on quaternion pairs, independent of the basis table
Octonion<F> doubled(const Octonion<F>& x, const Octonion<F>& y) {
    const auto a = x.first(), b = x.second(), c = y.first(), d = y.second();
    return Octonion<F>::from_quaternions(a * c - d.bar() * b, d * a + b * c.bar());
}

Quaternion<F> sample_quat(int k) {
    return {F(k % 3 - 1), F((2 * k) % 5 - 2), F((3 * k) % 4 - 1), F((5 * k) % 3)};
}

QMat3<F> sample_hermitian(int k) {
    return hermitian_from<F>({F(k % 3), F(1 - k % 2), F(2)}, {sample_quat(k), sample_quat(k + 1), sample_quat(k + 2)});
}

}  // namespace

TEST_CASE("cyclotomic field constants") {
    const F w = K<F>::omega(), nu = K<F>::nu(), i = K<F>::i();
    CHECK((F(1) + w + w * w).is_zero());
    CHECK(pow(nu, 3) == w);
    CHECK(pow(nu, 9) == F(1));
    CHECK(pow(nu, 1) != F(1));
    CHECK(i * i == F(-1));
    CHECK(K<F>::sqrt3() * K<F>::sqrt3() == F(3));
    CHECK(F::zeta(18) == F(-1));
    CHECK(F::zeta(36) == F(1));
    CHECK(F::degree == 12);
    CHECK(Cyc180::degree == 48);
}

TEST_CASE("sum of primitive N-th roots is the Moebius value") {
    auto primitive_sum = [](auto tag, int n) {
        using G = decltype(tag);
        G s(0);
        for (int k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) s += root_of_unity<G>(k, n);
        return s;
    };
    CHECK(primitive_sum(F{}, 36) == F(0));   // 36 is not squarefree
    CHECK(primitive_sum(F{}, 6) == F(1));    // mu(6) = 1
    CHECK(primitive_sum(F{}, 3) == F(-1));   // mu(3) = -1
    CHECK(primitive_sum(Cyc180{}, 30) == Cyc180(-1));
    CHECK(primitive_sum(Cyc180{}, 5) == Cyc180(-1));
}

TEST_CASE("field axioms on sampled elements") {
    for (int k = 0; k < 12; ++k) {
        const F a = sample_scalar(k), b = sample_scalar(k + 5), c = sample_scalar(3 * k + 1);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * a.conj()).is_real());
        if (!a.is_zero()) CHECK(a * a.inv() == F(1));
    }
}

TEST_CASE("conversion to complex numbers agrees with floating point") {
    for (int k = 0; k < 36; ++k) {
        const auto z = to_float(F::zeta(k));
        const double th = 2 * std::numbers::pi * k / 36;
        CHECK(std::abs(z - std::polar(1.0, th)) < 1e-12);
        CHECK(std::abs(to_float(K<F>::cos36(k)) - std::cos(th)) < 1e-12);
        CHECK(std::abs(to_float(K<F>::sin36(k)) - std::sin(th)) < 1e-12);
        CHECK(K<F>::cos36(k) * K<F>::cos36(k) + K<F>::sin36(k) * K<F>::sin36(k) == F(1));
    }
}

TEST_CASE("arbitrary precision fallback stays exact") {
    const F x = F(3) + F(2) * F::zeta(1);
    const F big = pow(x, 120);
    CHECK(big * pow(x, -120) == F(1));
    CHECK(pow(x.conj(), 120) == big.conj());
    CHECK(std::abs(to_float(big) - std::pow(to_float(x), 120)) / std::abs(to_float(big)) < 1e-9);
}

TEST_CASE("root_of_unity rejects orders that do not divide the conductor") {
    CHECK_THROWS_AS(root_of_unity<F>(1, 5), std::invalid_argument);
    CHECK_NOTHROW(root_of_unity<Cyc180>(1, 5));
    CHECK_THROWS_AS(F(0).inv(), std::domain_error);
}

TEST_CASE("rational linear algebra against known values") {
    // Hilbert matrix H4: det = 1/6048000
    Matrix<Rational> h(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) = Rational(1, i + j + 1);
    CHECK(determinant(h) == Rational(1, 6048000));
    CHECK(h * inverse(h) == Matrix<Rational>::identity(4));
    CHECK(rank(h) == 4);

    std::vector<std::vector<Rational>> m = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
    const auto ns = nullspace(m, 4);
    CHECK(rank(m) == 2);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        for (const auto& row : m) {
            Rational s = 0;
            for (int j = 0; j < 4; ++j) s += row[size_t(j)] * v[size_t(j)];
            CHECK(s == 0);
        }
    CHECK_THROWS(inverse(Matrix<Rational>(2, 2)));
}

TEST_CASE("sparse echelon agrees with dense rank") {
    // four sampled rows, then five combinations of them: rank 4
    std::vector<std::vector<F>> dense;
    for (int k = 0; k < 4; ++k) {
        std::vector<F> row(7);
        for (int j = 0; j < 7; ++j) row[size_t(j)] = (j + k) % 3 == 0 ? F(0) : sample_scalar(7 * k + j);
        dense.push_back(row);
    }
    for (int k = 0; k < 5; ++k) {
        std::vector<F> row(7);
        for (int j = 0; j < 7; ++j) row[size_t(j)] = sample_scalar(k) * dense[size_t(k % 4)][size_t(j)] + dense[size_t((k + 1) % 4)][size_t(j)];
        dense.push_back(row);
    }
    SparseEchelon<F> ech(7);
    for (const auto& row : dense) {
        SparseEchelon<F>::Row sp;
        for (int j = 0; j < 7; ++j)
            if (!row[size_t(j)].is_zero()) sp.emplace_back(j, row[size_t(j)]);
        ech.insert(sp);
    }
    CHECK(rank(dense) == 4);
    CHECK(ech.rank() == 4);
    CHECK(ech.nullity() == 3);
}

TEST_CASE("octonion table matches the doubling formula") {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto x = Octonion<F>::basis(a), y = Octonion<F>::basis(b);
            CHECK(x * y == doubled(x, y));
        }
    const auto e = [](int k) { return Octonion<F>::basis(k); };
    CHECK(e(1) * e(2) == e(3));
    CHECK(e(1) * e(4) == e(5));
    CHECK(e(2) * e(4) == e(6));
    CHECK(e(3) * e(4) == e(7));
}

TEST_CASE("octonions form an alternative composition algebra") {
    for (int k = 0; k < 10; ++k) {
        const auto x = sample_oct(k), y = sample_oct(k + 3), z = sample_oct(2 * k + 1);
        CHECK((x * x) * y == x * (x * y));
        CHECK((y * x) * x == y * (x * x));
        CHECK(x * (y * x) == (x * y) * x);
        // Moufang: z(x(zy)) = ((zx)z)y
        CHECK(z * (x * (z * y)) == ((z * x) * z) * y);
        CHECK(oct_norm(x * y) == oct_norm(x) * oct_norm(y));
        CHECK((x * y).bar() == y.bar() * x.bar());
        CHECK(x * x.bar() == Octonion<F>::scalar(oct_norm(x)));
    }
}

TEST_CASE("split model round trip and product") {
    for (int k = 0; k < 10; ++k) {
        const auto x = sample_oct(k), y = sample_oct(k + 4);
        CHECK(from_split(to_split(x)) == x);
        CHECK(from_split(split_mul(to_split(x), to_split(y))) == x * y);
    }
}

TEST_CASE("Jordan algebra identities") {
    for (int k = 0; k < 4; ++k) {
        const auto X = sample_jordan(k), Y = sample_jordan(k + 7);
        const auto XX = circ(X, X);
        CHECK(circ(X, Y) == circ(Y, X));
        CHECK(circ(circ(XX, Y), X) == circ(XX, circ(Y, X)));
        CHECK(circ(JordanElem<F>::identity(), X) == X);
        const auto XxX = cross(X, X);
        CHECK(cross(XxX, XxX) == det(X) * X);
        CHECK(circ(X, XxX) == det(X) * JordanElem<F>::identity());
        CHECK(cross(X, Y) == cross(Y, X));
        CHECK(JordanElem<F>::from_vec(X.to_vec()) == X);
    }
    CHECK(det(JordanElem<F>::identity()) == F(1));
    CHECK(det(JordanElem<F>::E(1)) == F(0));
    CHECK_THROWS_AS(JordanElem<F>::from_vec(Vec<F>(26)), std::invalid_argument);
}

TEST_CASE("quaternionic and complex splittings of the Jordan algebra round trip") {
    for (int k = 0; k < 6; ++k) {
        const auto X = sample_jordan(k);
        CHECK(from_hsplit(to_hsplit(X)) == X);
        CHECK(from_csplit(to_csplit(X)) == X);
    }
}

TEST_CASE("k is multiplicative and k_J maps Hermitian matrices to skew ones") {
    for (int n = 0; n < 6; ++n) {
        const auto p = sample_quat(n), q = sample_quat(n + 2);
        CHECK(k_quat(p * q) == k_quat(p) * k_quat(q));
        CHECK(k_quat_inv(k_quat(p)(0, 0), k_quat(p)(0, 1), k_quat(p)(1, 0), k_quat(p)(1, 1)) == p);
        const auto M = sample_hermitian(n);
        const auto S = k_J(M);
        CHECK(is_skew(S));
        CHECK(k_J_inv(S) == M);
        CHECK(k(mat3_mul(M, M)) == k(M) * k(M));
    }
    CHECK_THROWS_AS(k_J_inv(Matrix<F>::identity(6)), std::invalid_argument);
}
