// Automorphism groups, the parametrizing homomorphisms and the exact samplers.

#include "z3z3/sampling.hpp"

#include <catch_amalgamated.hpp>

using namespace z3z3;
using F = CycScalar;

namespace {

AlgMap<F> scaled_identity(Space s, const F& x) { return {s, x * Matrix<F>::identity(space_dim(s))}; }

// swaps e1 and e2 only: e1 e2 = e3 but e2 e1 = -e3, so not an automorphism
AlgMap<F> swap12() {
    return AlgMap<F>::on_octonions([](const Octonion<F>& x) {
        Octonion<F> y = x;
        std::swap(y.c[1], y.c[2]);
        return y;
    });
}

}  // namespace

TEST_CASE("AlgMap composition, powers and inverses") {
    const auto g = named_auto<F>(Auto::gamma3);
    CHECK(power(g, 0) == AlgMap<F>::identity(Space::Jordan27));
    CHECK(power(g, 3) == AlgMap<F>::identity(Space::Jordan27));
    CHECK(power(g, -1) == power(g, 2));
    CHECK(compose(g, inverse(g)) == AlgMap<F>::identity(Space::Jordan27));
    CHECK(conjugate(g, named_auto<F>(Auto::w3)) == compose(compose(g, named_auto<F>(Auto::w3)), inverse(g)));
    CHECK_THROWS_AS(compose(g, named_auto<F>(Auto::w3, Space::Cayley8)), std::invalid_argument);
    CHECK_THROWS_AS(AlgMap<F>(Space::Cayley8, Matrix<F>::identity(27)), std::invalid_argument);
    CHECK_THROWS_AS(AlgMap<F>(Space::Jordan27, Matrix<F>(27, 27)).inverse_matrix(), std::domain_error);
}

TEST_CASE("auto names round trip") {
    for (const auto& [a, name] : auto_names()) CHECK(parse_auto(name) == a);
    CHECK_THROWS_AS(parse_auto("delta"), std::invalid_argument);
}

TEST_CASE("membership tests accept automorphisms and reject other maps") {
    CHECK(is_g2(AlgMap<F>::identity(Space::Cayley8)));
    CHECK(is_g2(named_auto<F>(Auto::gamma3, Space::Cayley8)));
    CHECK(is_g2(named_auto<F>(Auto::w3, Space::Cayley8)));
    CHECK_FALSE(is_g2(swap12()));
    CHECK_FALSE(is_g2(scaled_identity(Space::Cayley8, F(2))));
    // unimodular but not real
    CHECK_FALSE(is_g2(scaled_identity(Space::Cayley8, K<F>::omega())));

    for (auto a : {Auto::gamma, Auto::gamma3, Auto::sigma, Auto::sigma3, Auto::w3}) {
        INFO(auto_name(a));
        CHECK(is_f4(named_auto<F>(a)));
        CHECK(is_e6(named_auto<F>(a)));
    }
    for (auto a : {Auto::nu3, Auto::mu3, Auto::deltaR, Auto::deltaQ, Auto::deltaN}) {
        INFO(auto_name(a));
        CHECK(is_e6(named_auto<F>(a)));
    }
    CHECK_FALSE(is_f4(named_auto<F>(Auto::nu3)));
    CHECK_FALSE(is_f4(scaled_identity(Space::Jordan27, F(2))));
    CHECK_FALSE(is_e6(scaled_identity(Space::Jordan27, F(2))));
    // omega id keeps det and the Hermitian form: it is central in E6
    CHECK(is_e6(scaled_identity(Space::Jordan27, K<F>::omega())));
}

TEST_CASE("order-3 automorphisms and the central cubes") {
    for (auto a : {Auto::gamma3, Auto::sigma3, Auto::w3, Auto::sigma3p, Auto::w3p}) {
        INFO(auto_name(a));
        const auto g = named_auto<F>(a);
        CHECK(power_is_identity(g, 3));
        CHECK_FALSE(g.matrix().is_identity());
    }
    for (auto a : {Auto::nu3, Auto::mu3}) {
        INFO(auto_name(a));
        F s;
        CHECK(is_scalar_map(power(named_auto<F>(a), 3), &s));
        CHECK(s == K<F>::omega());
        CHECK(power_is_identity(named_auto<F>(a), 9));
    }
    CHECK(power_is_identity(named_auto<F>(Auto::gamma), 2));
    CHECK(power_is_identity(named_auto<F>(Auto::sigma), 2));
}

TEST_CASE("the G2 automorphisms extend to F4 diagonally") {
    for (auto a : {Auto::gamma3, Auto::w3}) {
        INFO(auto_name(a));
        const auto ext = g2_to_f4(named_auto<F>(a, Space::Cayley8));
        CHECK(is_f4(ext));
        CHECK(ext == named_auto<F>(a));
    }
}

TEST_CASE("samples lie in their groups and are deterministic") {
    Sampler<F> s(42), u(43);
    for (int k = 0; k < 4; ++k) {
        CHECK(is_unitary(s.unitary(4)));
        const auto m = s.su(3).value();
        CHECK(determinant(m) == F(1));
    }
    Sampler<F> a(7), b(7);
    CHECK(a.sp3().value() == b.sp3().value());
    CHECK(a.u3cx().value() == b.u3cx().value());
    CHECK(a.block({{0}, {1, 2}, {3, 4, 5}}).value() == b.block({{0}, {1, 2}, {3, 4, 5}}).value());
    Sampler<F> c(7);
    CHECK(c.su(4).value() != u.su(4).value());

    const auto draws = sample_params<F>(&Sampler<F>::unit_quat, 5, 9);
    const auto again = sample_params<F>(&Sampler<F>::unit_quat, 5, 9);
    REQUIRE(draws.size() == 5);
    for (size_t k = 0; k < draws.size(); ++k) CHECK(draws[k].value() == again[k].value());
}

TEST_CASE("parameter types reject elements outside their groups") {
    CHECK_THROWS_AS(UnitQuat<F>(Quaternion<F>::scalar(F(2))), std::invalid_argument);
    CHECK_THROWS_AS(UnitQuat<F>(Quaternion<F>::scalar(K<F>::omega())), std::invalid_argument);
    CHECK_THROWS_AS(UnitField<F>(F(2)), std::invalid_argument);
    CHECK_THROWS_AS(SUMat<F>(2, F(2) * Matrix<F>::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(SUMat<F>(2, K<F>::i() * Matrix<F>::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(BlockUnitary<F>({{0}, {0, 1}}, Matrix<F>::identity(2)), std::invalid_argument);
    CHECK_NOTHROW(UnitField<F>(K<F>::nu()));
}

TEST_CASE("parametrizing maps are homomorphisms into the groups") {
    Sampler<F> s(5);
    for (int k = 0; k < 2; ++k) {
        const auto p = s.unit_quat(), q = s.unit_quat(), p2 = s.unit_quat(), q2 = s.unit_quat();
        const auto g = phi_g2_gamma(p, q);
        CHECK(is_g2(g));
        CHECK(compose(g, phi_g2_gamma(p2, q2)) ==
              phi_g2_gamma(UnitQuat<F>(p.value() * p2.value()), UnitQuat<F>(q.value() * q2.value())));

        const auto A = s.su3cx(), B = s.su3cx();
        CHECK(is_g2(phi_g2_w3(A)));
        CHECK(compose(phi_g2_w3(A), phi_g2_w3(B)) == phi_g2_w3(SU3Cx<F>(mat3_mul(A.value(), B.value()))));

        const auto a = s.unit_cx(), b = s.unit_cx();
        CHECK(is_f4(D(a)));
        CHECK(compose(D(a), D(b)) == D(UnitCx<F>(a.value() * b.value())));
        CHECK(commutes(D(a), named_auto<F>(Auto::sigma)));

        const auto t1 = s.unit_field(), t2 = s.unit_field();
        CHECK(is_e6(phi6sigma(t1)));
        CHECK(compose(phi6sigma(t1), phi6sigma(t2)) == phi6sigma(UnitField<F>(t1.value() * t2.value())));
    }
    const auto sp = Sampler<F>(11).sp3();
    CHECK(is_f4(phi_f4_gamma(UnitQuat<F>::one(), sp)));
    CHECK(commutes(phi_f4_gamma(UnitQuat<F>::one(), sp), named_auto<F>(Auto::gamma)));
}

TEST_CASE("the mu3 representative in the e6 gamma model") {
    // mu3 is phi_{6,sigma}(nu); the representative under the gamma-type map has diag(nu^2, nu^2, nu^-1 x4)
    const F nu = K<F>::nu(), ni = nu.inv();
    const auto rep = phi_e6_gamma(UnitQuat<F>::one(),
                                  SUMat<F>(6, Matrix<F>::diagonal({nu * nu, nu * nu, ni, ni, ni, ni})));
    CHECK(rep == named_auto<F>(Auto::mu3));
    const auto stated = phi_e6_gamma(UnitQuat<F>::one(),
                                     SUMat<F>(6, Matrix<F>::diagonal({ni * ni, nu * nu, ni, nu, ni, nu})));
    CHECK(stated != named_auto<F>(Auto::mu3));
    CHECK(is_f4(stated));
    CHECK_FALSE(is_scalar_map(power(stated, 3)));
}
