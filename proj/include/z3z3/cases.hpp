/**
 * @file cases.hpp
 * @brief The fourteen pairs of commuting order-3 automorphisms and the
 *        checklist run for each.
 *
 * Each case samples its restricted homomorphism on the parameter domain of
 * the joint fixed subgroup. Where a case is handled in a conjugated model
 * (primed automorphism), the sample is delta alpha delta^-1 with alpha built
 * in that model.
 */
#pragma once

#include "z3z3/suites.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace z3z3 {

struct CaseInfo {
    int id;
    Algebra algebra;
    Auto sigma, tau;
    int expected_dim;
    const char* group;  // stated joint fixed subgroup
};

inline const std::array<CaseInfo, 14>& case_table() {
    static const std::array<CaseInfo, 14> t = {{
        {1, Algebra::g2, Auto::gamma3, Auto::w3, 2, "(U(1) x U(1))/Z2"},
        {2, Algebra::f4, Auto::gamma3, Auto::sigma3, 8, "(U(1) x Sp(1) x U(2))/Z2"},
        {3, Algebra::f4, Auto::gamma3, Auto::w3, 10, "(U(1) x U(1) x SU(3))/Z3"},
        {4, Algebra::f4, Auto::sigma3, Auto::w3, 10, "(SU(3) x U(1) x U(1))/Z3"},
        {5, Algebra::e6, Auto::gamma3, Auto::sigma3, 12, "(U(1)^3 x SU(2)^3)/Z2^4"},
        {6, Algebra::e6, Auto::gamma3, Auto::nu3, 26, "(U(1) x U(1) x SU(5))/(Z2 x Z5)"},
        {7, Algebra::e6, Auto::gamma3, Auto::mu3, 10, "(U(1)^4 x SU(2)^2)/(Z2 x Z2 x Z4)"},
        {8, Algebra::e6, Auto::gamma3, Auto::w3, 18, "(U(1) x U(1) x SU(3) x SU(3))/(Z2 x Z3)"},
        {9, Algebra::e6, Auto::sigma3, Auto::nu3, 12, "(Sp(1) x U(1)^3 x SU(2)^2)/(Z2 x Z2 x Z4)"},
        {10, Algebra::e6, Auto::sigma3, Auto::mu3, 30, "(U(1) x Spin(2) x Spin(8))/(Z2 x Z4)"},
        {11, Algebra::e6, Auto::sigma3, Auto::w3, 12, "(SU(3) x U(1)^4)/Z3"},
        {12, Algebra::e6, Auto::nu3, Auto::mu3, 12, "(Sp(1) x U(1)^3 x SU(2)^2)/(Z2 x Z2 x Z4)"},
        {13, Algebra::e6, Auto::nu3, Auto::w3, 16, "(Sp(1) x U(1)^2 x SU(2) x SU(3))/(Z2 x Z2 x Z3)"},
        {14, Algebra::e6, Auto::mu3, Auto::w3, 12, "(SU(3) x U(1)^4)/Z3"},
    }};
    return t;
}

inline const CaseInfo& case_info(int id) {
    if (id < 1 || id > 14) throw std::out_of_range("case id must be in 1..14");
    return case_table()[size_t(id - 1)];
}

inline Space case_space(const CaseInfo& c) { return c.algebra == Algebra::g2 ? Space::Cayley8 : Space::Jordan27; }

template <class F>
struct CaseSetup {
    std::string family;  // relational formulas that apply
    std::function<AlgMap<F>(Sampler<F>&)> draw;
    std::vector<std::pair<std::string, std::function<AlgMap<F>()>>> kernel;
    struct Conj {
        Auto x, delta, primed, partner;
    };
    std::optional<Conj> conj;
};

namespace detail {

template <class F>
CaseSetup<F> case_setup(int id) {
    using S = Sampler<F>;
    using C = Consts<F>;
    const auto dR = named_auto<F>(Auto::deltaR), dQ = named_auto<F>(Auto::deltaQ), dN = named_auto<F>(Auto::deltaN);
    const auto m1 = UnitQuat<F>(Quaternion<F>::scalar(F(-1)));
    const Cx<F> cw = C::omega_c();
    const auto uw = UnitCx<F>(cw);
    const auto W = SU3Cx<F>::scalar(cw);
    auto cxq = [](S& s) { return s.unit_cx().as_unit_quat(); };
    auto su2 = [](const F& x) { return su_scalar<F>(2, x); };
    auto e6_minus = [=] { return phi_e6_gamma(m1, su_scalar<F>(6, F(-1))); };
    // conjugate a gamma-type sample into the unprimed model
    auto via = [](const AlgMap<F>& d, const AlgMap<F>& a) { return conjugate(d, a); };

    CaseSetup<F> c;
    switch (id) {
        case 1:
            c.family = "g2-gamma";
            c.draw = [=](S& s) { return phi_g2_gamma(cxq(s), cxq(s)); };
            c.kernel = {{"(-1, -1)", [=] { return phi_g2_gamma(m1, m1); }}};
            break;
        case 2:
            c.family = "f4-gamma";
            c.draw = [=](S& s) {
                const auto p = cxq(s);
                const auto q = s.unit_quat();
                return phi_f4_gamma(p, twist_e2(embed_sp1_u2(q, s.u2cx())));
            };
            c.kernel = {{"(-1, -1, -E)", [=] {
                             CMat2<F> u{};
                             u[0][0] = u[1][1] = Cx<F>::scalar(F(-1));
                             return phi_f4_gamma(m1, twist_e2(embed_sp1_u2(m1, U2Cx<F>(u))));
                         }}};
            break;
        case 3:
            c.family = "f4-w3";
            c.draw = [](S& s) {
                const auto a = s.unit_cx(), b = s.unit_cx();
                return phi_f4_w3(embed_u1_u1(a, b), s.su3cx());
            };
            c.kernel = {{"(omega, omega, omega E)", [=] { return phi_f4_w3(embed_u1_u1(uw, uw), W); }}};
            break;
        case 4:
            c.family = "f4-w3";
            c.draw = [](S& s) {
                const auto P = s.su3cx();
                const auto a = s.unit_cx(), b = s.unit_cx();
                return phi_f4_w3(P, embed_u1_u1(a, b));
            };
            c.kernel = {{"(omega E, omega, omega)", [=] { return phi_f4_w3(W, embed_u1_u1(uw, uw)); }}};
            break;
        case 5:
            c.family = "e6-gamma";
            c.draw = [=](S& s) {
                const auto p = cxq(s);
                const auto a = s.unit_field(), b = s.unit_field();
                const auto A = s.su(2), B = s.su(2), Cm = s.su(2);
                return via(dR, phi_e6_gamma(p, embed_u2u2u2(a, b, A, B, Cm).as_su()));
            };
            c.kernel = {{"(-1, 1, 1, -E, -E, -E)", [=] {
                             const auto u = ufield<F>(F(1));
                             return phi_e6_gamma(m1, embed_u2u2u2(u, u, su2(F(-1)), su2(F(-1)), su2(F(-1))).as_su());
                         }}};
            c.conj = {{Auto::sigma3, Auto::deltaR, Auto::sigma3p, Auto::gamma3}};
            break;
        case 6:
            c.family = "e6-gamma";
            c.draw = [=](S& s) {
                const auto p = cxq(s);
                const auto t = s.unit_field();
                return phi_e6_gamma(p, embed_u1u5(t, s.su(5)).as_su());
            };
            c.kernel = {{"(-1, -1, E)", [=] {
                             return phi_e6_gamma(m1, embed_u1u5(ufield<F>(F(-1)), su_scalar<F>(5, F(1))).as_su());
                         }}};
            break;
        case 7:
            c.family = "e6-gamma";
            c.draw = [=](S& s) {
                const auto p = cxq(s);
                const auto a = s.unit_field(), b = s.unit_field(), cc = s.unit_field();
                const auto A = s.su(2), B = s.su(2);
                return via(dQ, phi_e6_gamma(p, embed_u1u1u2u2(a, b, cc, A, B).as_su()));
            };
            c.kernel = {{"(-1, i, i, 1, -E, E)", [=] {
                             const auto i = ufield<F>(K<F>::i());
                             return phi_e6_gamma(m1, embed_u1u1u2u2(i, i, ufield<F>(F(1)), su2(F(-1)), su2(F(1))).as_su());
                         }}};
            c.conj = {{Auto::mu3, Auto::deltaQ, Auto::mu3p, Auto::gamma3}};
            break;
        case 8:
            c.family = "e6-gamma";
            c.draw = [=](S& s) {
                const auto p = cxq(s);
                const auto a = s.unit_field();
                const auto A = s.su(3), B = s.su(3);
                return via(dN, phi_e6_gamma(p, embed_u3u3(a, A, B).as_su()));
            };
            c.kernel = {{"(-1, -1, E, E)", [=] {
                             return phi_e6_gamma(
                                 m1, embed_u3u3(ufield<F>(F(-1)), su_scalar<F>(3, F(1)), su_scalar<F>(3, F(1))).as_su());
                         }}};
            c.conj = {{Auto::w3, Auto::deltaN, Auto::w3p, Auto::gamma3}};
            break;
        case 9:
        case 12:
            c.family = "e6-gamma";
            c.draw = [=](S& s) {
                const auto q = s.unit_quat();
                const auto a = s.unit_field(), b = s.unit_field(), cc = s.unit_field();
                const auto A = s.su(2), B = s.su(2);
                return via(id == 9 ? dR : dQ, phi_e6_gamma(q, embed_u1u1u2u2(a, b, cc, A, B).as_su()));
            };
            c.kernel = {{"(-1, i, i, 1, -E, E)", [=] {
                             const auto i = ufield<F>(K<F>::i());
                             return phi_e6_gamma(m1, embed_u1u1u2u2(i, i, ufield<F>(F(1)), su2(F(-1)), su2(F(1))).as_su());
                         }}};
            if (id == 9) c.conj = {{Auto::sigma3, Auto::deltaR, Auto::sigma3p, Auto::nu3}};
            else c.conj = {{Auto::mu3, Auto::deltaQ, Auto::mu3p, Auto::nu3}};
            break;
        case 10:
            c.family = "e6-gamma";
            c.draw = [](S& s) {
                const auto q = s.unit_quat();
                return phi_e6_gamma(q, s.block({{0, 1}, {2, 5}, {3, 4}}).as_su());
            };
            c.kernel = {{"(-1, -E)", e6_minus}};
            break;
        case 11:
        case 14:
            c.family = "e6-w3";
            c.draw = [](S& s) {
                const auto L = s.su3cx();
                const auto a = s.unit_cx(), b = s.unit_cx(), cc = s.unit_cx(), d = s.unit_cx();
                return phi_e6_w3(L, embed_u1_u1(a, b), embed_u1_u1(cc, d));
            };
            c.kernel = {{"(omega E, omega, omega, omega, omega)", [=] {
                             return phi_e6_w3(W, embed_u1_u1(uw, uw), embed_u1_u1(uw, uw));
                         }}};
            break;
        case 13:
            c.family = "e6-gamma";
            c.draw = [=](S& s) {
                const auto q = s.unit_quat();
                const auto a = s.unit_field(), b = s.unit_field();
                const auto A = s.su(2), B = s.su(3);
                return via(dN, phi_e6_gamma(q, embed_u1u2u3(a, b, A, B).as_su()));
            };
            c.kernel = {{"(-1, 1, -1, -E, E)", [=] {
                             return phi_e6_gamma(m1, embed_u1u2u3(ufield<F>(F(1)), ufield<F>(F(-1)), su2(F(-1)),
                                                           su_scalar<F>(3, F(1)))
                                                         .as_su());
                         }}};
            c.conj = {{Auto::w3, Auto::deltaN, Auto::w3p, Auto::nu3}};
            break;
        default: throw std::out_of_range("case id must be in 1..14");
    }
    return c;
}

}  // namespace detail

/**
 * Checklist, in order: (a) orders, (b) commutativity, (c) membership,
 * (d) relational formulas of the case's homomorphism, (e) sampled images lie
 * in the joint fixed subgroup, (f) kernel elements, (g) joint fixed dimension,
 * (h) conjugacy identity when the case uses a primed model.
 */
template <class F>
Report run_case(int id, int samples, std::uint64_t seed) {
    const CaseInfo& info = case_info(id);
    Stopwatch sw;
    Report r;
    r.id = std::to_string(id);
    const Space sp = case_space(info);
    const auto s = named<F>(info.sigma, sp), t = named<F>(info.tau, sp);
    const CaseSetup<F> setup = detail::case_setup<F>(id);

    check_order3<F>(r, info.sigma, sp);
    check_order3<F>(r, info.tau, sp);
    check_commutes<F>(r, s, t);
    check_member<F>(r, info.algebra, s);
    check_member<F>(r, info.algebra, t);
    check_formulas<F>(r, setup.family, {info.sigma, info.tau});

    Sampler<F> smp(stream_seed(seed, "case-" + r.id));
    int good = 0;
    for (int k = 0; k < samples; ++k) {
        const AlgMap<F> a = setup.draw(smp);
        good += member_of<F>(info.algebra)(a) && commutes(a, s.second) && commutes(a, t.second) ? 1 : 0;
    }
    r.add("sampled images in " + std::string(group_name(info.algebra)) + "^" + s.first + " cap " +
              group_name(info.algebra) + "^" + t.first,
          good == samples, std::to_string(good) + " of " + std::to_string(samples) + " samples");

    check_kernel<F>(r, setup.kernel);

    const int got = fixed_dim<F>(info.algebra, {s.second, t.second});
    r.expected_dim = info.expected_dim;
    r.computed_dim = got;
    std::string detail = "computed " + std::to_string(got) + ", expected " + std::to_string(info.expected_dim);
    if (got != info.expected_dim && (info.sigma == Auto::mu3 || info.tau == Auto::mu3)) {
        const Auto other = info.sigma == Auto::mu3 ? info.tau : info.sigma;
        const int with_sigma = fixed_dim<F>(info.algebra, {named_auto<F>(other), named_auto<F>(Auto::sigma)});
        detail += "; mu3 has the fixed subalgebra of sigma, and the joint dim with sigma in its place is " +
                  std::to_string(with_sigma);
    }
    r.add("joint fixed dim", got == info.expected_dim, detail);

    if (id == 10) {
        const bool same = same_fixed_subspace<F>(Algebra::e6, {s.second, t.second}, {s.second});
        r.add("joint fixed subalgebra equals that of sigma3", same, same ? "equal subspaces" : "subspaces differ");
    }

    if (setup.conj) {
        const auto& cj = *setup.conj;
        check_conjugacy<F>(r, cj.x, cj.delta, cj.primed);
        check_commutes<F>(r, named<F>(cj.delta), named<F>(cj.partner));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

}  // namespace z3z3
