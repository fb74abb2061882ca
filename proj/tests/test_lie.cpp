// Lie algebra models and fixed dimensions.
//
// Oracle: for a finite group G of automorphisms acting on a Lie algebra,
// dim of the fixed subalgebra = (1/|G|) sum over G of tr Ad(g). The traces are
// computed from full matrix products and basis coordinates, sharing nothing
// with fixed_dim's pivot-rank computation. The joint values below were
// produced by this oracle and frozen; three of them differ from the stated
// table (cases 7, 12, 14), which the case runner reports as failures.

#include "z3z3/cases.hpp"

#include <catch_amalgamated.hpp>

using namespace z3z3;
using F = CycScalar;

namespace {

F trace_ad(const LieBasis<F>& b, const AlgMap<F>& g) {
    const Matrix<F>& gi = g.inverse_matrix();
    F tr(0);
    for (int k = 0; k < b.dim(); ++k) tr += basis_coords(b, g.matrix() * b.elems[size_t(k)] * gi)[size_t(k)];
    return tr;
}

// group generated by two commuting automorphisms whose adjoint actions have order dividing 3
int character_dim(Algebra alg, const AlgMap<F>& s, const AlgMap<F>& t) {
    const auto& b = lie_basis<F>(alg);
    F sum(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sum += trace_ad(b, compose(power(s, i), power(t, j)));
    const F avg = sum * F(Rational(1, 9));
    REQUIRE(avg.is_real());
    for (int k = 1; k < F::degree; ++k) REQUIRE(avg.coeff(k) == 0);
    return int(avg.coeff(0).get_num().get_si());
}

Space space_of(Algebra a) { return a == Algebra::g2 ? Space::Cayley8 : Space::Jordan27; }

}  // namespace

TEST_CASE("algebra dimensions") {
    CHECK(derivation_nullity(octonion_tensor<F>(), false) == 14);
    CHECK(derivation_nullity(circ_tensor<F>(), true) == 52);
    CHECK(lie_basis<F>(Algebra::g2).dim() == 14);
    CHECK(lie_basis<F>(Algebra::f4).dim() == 52);
    CHECK(lie_basis<F>(Algebra::e6).dim() == 78);
}

TEST_CASE("basis elements satisfy the defining conditions") {
    for (const auto& D : lie_basis<F>(Algebra::g2).elems) CHECK(is_skew(D));
    for (const auto& D : lie_basis<F>(Algebra::f4).elems) CHECK(skew_for_trace_form(D));
    int bad = 0;
    for (const auto& D : lie_basis<F>(Algebra::e6).elems) bad += is_e6_derivation(D) ? 0 : 1;
    CHECK(bad == 0);
    CHECK_FALSE(is_e6_derivation(Matrix<F>::identity(27)));
}

TEST_CASE("the adjoint action preserves the compact real form") {
    for (auto a : {Auto::gamma3, Auto::sigma3, Auto::w3}) {
        INFO(auto_name(a));
        CHECK(ad_preserves_real_span(lie_basis<F>(Algebra::f4), named_auto<F>(a)));
    }
    for (auto a : {Auto::nu3, Auto::mu3, Auto::deltaQ}) {
        INFO(auto_name(a));
        CHECK(ad_preserves_real_span(lie_basis<F>(Algebra::e6), named_auto<F>(a)));
    }
    CHECK(ad_preserves_real_span(lie_basis<F>(Algebra::g2), named_auto<F>(Auto::w3, Space::Cayley8)));
}

TEST_CASE("single fixed dimensions agree with the character formula") {
    const std::vector<std::tuple<Algebra, Auto, int>> rows = {
        {Algebra::g2, Auto::gamma3, 4},  {Algebra::g2, Auto::w3, 8},   {Algebra::f4, Auto::gamma3, 22},
        {Algebra::f4, Auto::sigma3, 22}, {Algebra::f4, Auto::w3, 16},  {Algebra::e6, Auto::gamma3, 36},
        {Algebra::e6, Auto::sigma3, 30}, {Algebra::e6, Auto::nu3, 28}, {Algebra::e6, Auto::mu3, 46},
        {Algebra::e6, Auto::w3, 24}};
    for (const auto& [alg, a, want] : rows) {
        INFO(algebra_name(alg) << " " << auto_name(a));
        const auto g = named_auto<F>(a, space_of(alg));
        const auto id = AlgMap<F>::identity(space_of(alg));
        CHECK(character_dim(alg, g, id) == want);
        CHECK(fixed_dim<F>(alg, {g}) == want);
    }
}

TEST_CASE("joint fixed dimensions agree with the character formula") {
    // frozen oracle output, in case order
    const int frozen[14] = {2, 8, 10, 10, 12, 26, 20, 18, 12, 30, 12, 20, 16, 16};
    for (const auto& c : case_table()) {
        INFO("case " << c.id);
        const Space sp = case_space(c);
        const auto s = named_auto<F>(c.sigma, sp), t = named_auto<F>(c.tau, sp);
        const int d = fixed_dim<F>(c.algebra, {s, t});
        CHECK(d == frozen[c.id - 1]);
        CHECK(character_dim(c.algebra, s, t) == d);
        if (c.id != 7 && c.id != 12 && c.id != 14) CHECK(d == c.expected_dim);
    }
}

TEST_CASE("fixed subspace coincidences") {
    const auto mu = named_auto<F>(Auto::mu3), sigma = named_auto<F>(Auto::sigma), s3 = named_auto<F>(Auto::sigma3);
    CHECK(same_fixed_subspace<F>(Algebra::e6, {mu}, {sigma}));
    CHECK(same_fixed_subspace<F>(Algebra::e6, {s3, mu}, {s3}));
    CHECK_FALSE(same_fixed_subspace<F>(Algebra::e6, {named_auto<F>(Auto::nu3)}, {sigma}));
}

TEST_CASE("fixed_dim certifies membership") {
    CHECK_THROWS_AS(fixed_dim<F>(Algebra::f4, {named_auto<F>(Auto::nu3)}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_dim<F>(Algebra::g2, {named_auto<F>(Auto::gamma3)}), std::invalid_argument);
    CHECK(fixed_dim<F>(Algebra::e6, {AlgMap<F>::identity(Space::Jordan27)}) == 78);
}
