/**
 * @file suites.hpp
 * @brief Relational formulas and the supporting-result suites: homomorphism
 *        laws, kernels, single fixed dimensions, embeddings and conjugacies.
 *
 * Suites never throw on a mathematical failure. A failed identity becomes a
 * failed check whose detail says how the two sides differ.
 */
#pragma once

#include "z3z3/liealg.hpp"
#include "z3z3/report.hpp"
#include "z3z3/sampling.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace z3z3 {

// ---------------------------------------------------------------- relational formulas

/// One identity "hom(params) == named automorphism".
template <class F>
struct Formula {
    std::string family;  // g2-gamma, g2-w3, f4-gamma, f4-w3, e6-gamma, e6-w3
    Auto target;
    std::string params;
    std::function<AlgMap<F>()> build;

    [[nodiscard]] Space space() const { return family.rfind("g2", 0) == 0 ? Space::Cayley8 : Space::Jordan27; }
    [[nodiscard]] std::string label() const { return auto_name(target) + " = phi[" + family + "](" + params + ")"; }
};

template <class F>
const std::vector<Formula<F>>& formulas() {
    static const std::vector<Formula<F>> all = [] {
        using C = Consts<F>;
        using Q = Quaternion<F>;
        const auto one = UnitQuat<F>::one();
        const auto wq = UnitQuat<F>(C::omega_q());
        const Q q1 = Q::scalar(F(1)), qw = C::omega_q();
        const Cx<F> c1 = C::one_c(), cw = C::omega_c(), cwb = cw.bar();
        const F w = K<F>::omega(), wb = w.conj(), nu = K<F>::nu();
        const Cx<F> eps = C::eps();
        auto e6d = [one](std::vector<F> d) { return phi_e6_gamma(one, SUMat<F>(6, Matrix<F>::diagonal(d))); };
        const auto E3 = SU3Cx<F>::identity();
        std::vector<Formula<F>> v;
        v.push_back({"g2-gamma", Auto::gamma3, "omega, 1", [=] { return phi_g2_gamma(wq, one); }});
        v.push_back({"g2-gamma", Auto::w3, "1, conj(omega)", [=] { return phi_g2_gamma(one, UnitQuat<F>(qw.bar())); }});
        v.push_back({"g2-w3", Auto::gamma3, "diag(1, omega, conj(omega))",
                     [=] { return phi_g2_w3(SU3Cx<F>::diag(c1, cw, cwb)); }});
        v.push_back({"g2-w3", Auto::w3, "omega E", [=] { return phi_g2_w3(SU3Cx<F>::scalar(cw)); }});
        v.push_back({"f4-gamma", Auto::gamma3, "omega, E", [=] { return phi_f4_gamma(wq, SpMat3<F>::identity()); }});
        v.push_back({"f4-gamma", Auto::sigma3, "1, diag(1, conj(omega), omega)",
                     [=] { return phi_f4_gamma(one, SpMat3<F>(mat3_diag(q1, qw.bar(), qw))); }});
        v.push_back({"f4-gamma", Auto::w3, "1, conj(omega) E",
                     [=] { return phi_f4_gamma(one, SpMat3<F>(mat3_scalar(qw.bar()))); }});
        v.push_back({"f4-w3", Auto::gamma3, "diag(1, omega, conj(omega)), E",
                     [=] { return phi_f4_w3(SU3Cx<F>::diag(c1, cw, cwb), E3); }});
        v.push_back({"f4-w3", Auto::sigma3, "E, diag(1, conj(omega), omega)",
                     [=] { return phi_f4_w3(E3, SU3Cx<F>::diag(c1, cwb, cw)); }});
        v.push_back({"f4-w3", Auto::w3, "omega E, E", [=] { return phi_f4_w3(SU3Cx<F>::scalar(cw), E3); }});
        v.push_back({"e6-gamma", Auto::gamma3, "omega, E",
                     [=] { return phi_e6_gamma(wq, SUMat<F>(6, Matrix<F>::identity(6))); }});
        v.push_back({"e6-gamma", Auto::sigma3, "1, diag(1, 1, conj(w), w, w, conj(w))",
                     [=] { return e6d({F(1), F(1), wb, w, w, wb}); }});
        v.push_back({"e6-gamma", Auto::mu3, "1, diag(nu^-2, nu^2, nu^-1, nu, nu^-1, nu)",
                     [=] { return e6d({pow(nu, -2), pow(nu, 2), pow(nu, -1), nu, pow(nu, -1), nu}); }});
        v.push_back({"e6-gamma", Auto::w3, "1, diag(conj(w), w, conj(w), w, conj(w), w)",
                     [=] { return e6d({wb, w, wb, w, wb, w}); }});
        v.push_back({"e6-w3", Auto::gamma3, "diag(1, omega, conj(omega)), E, E",
                     [=] { return phi_e6_w3(SU3Cx<F>::diag(c1, cw, cwb), E3, E3); }});
        v.push_back({"e6-w3", Auto::sigma3, "E, diag(1, conj(omega), omega), diag(1, conj(omega), omega)", [=] {
                         return phi_e6_w3(E3, SU3Cx<F>::diag(c1, cwb, cw), SU3Cx<F>::diag(c1, cwb, cw));
                     }});
        v.push_back({"e6-w3", Auto::mu3, "E, diag(eps^-2, eps, eps), diag(eps^2, eps^-1, eps^-1)", [=] {
                         const Cx<F> e2 = eps * eps;
                         return phi_e6_w3(E3, SU3Cx<F>::diag(e2.inv(), eps, eps),
                                          SU3Cx<F>::diag(e2, eps.inv(), eps.inv()));
                     }});
        v.push_back({"e6-w3", Auto::w3, "omega E, E, E", [=] { return phi_e6_w3(SU3Cx<F>::scalar(cw), E3, E3); }});
        return v;
    }();
    return all;
}

namespace detail {

template <class F>
int differing_entries(const AlgMap<F>& a, const AlgMap<F>& b) {
    int n = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) n += a(i, j) == b(i, j) ? 0 : 1;
    return n;
}

/// "" when equal, otherwise how got differs from want
template <class F>
std::string relation(const AlgMap<F>& got, const AlgMap<F>& want) {
    if (got == want) return "";
    if (got == inverse(want)) return "differs; equals the inverse of the target";
    if (got == tau_conjugate(want)) return "differs; equals the tau-conjugate of the target";
    return "differs in " + std::to_string(differing_entries(got, want)) + " matrix entries";
}

}  // namespace detail

template <class F>
bool check_formula(Report& r, const Formula<F>& f) {
    const AlgMap<F> got = f.build();
    const std::string rel = detail::relation(got, named_auto<F>(f.target, f.space()));
    return r.add("formula " + f.label(), rel.empty(), rel.empty() ? "exact matrix identity" : rel);
}

template <class F>
void check_formulas(Report& r, const std::string& family, const std::vector<Auto>& targets = {}) {
    for (const auto& f : formulas<F>()) {
        if (f.family != family) continue;
        if (!targets.empty() && std::find(targets.begin(), targets.end(), f.target) == targets.end()) continue;
        check_formula(r, f);
    }
}

// ---------------------------------------------------------------- shared checks

template <class F>
using Member = std::function<bool(const AlgMap<F>&)>;

template <class F>
Member<F> member_of(Algebra a) {
    switch (a) {
        case Algebra::g2: return [](const AlgMap<F>& m) { return is_g2(m); };
        case Algebra::f4: return [](const AlgMap<F>& m) { return is_f4(m); };
        case Algebra::e6: return [](const AlgMap<F>& m) { return is_e6(m); };
    }
    throw std::invalid_argument("unknown algebra");
}

inline const char* group_name(Algebra a) { return a == Algebra::g2 ? "G2" : a == Algebra::f4 ? "F4" : "E6"; }

template <class F>
using Named = std::pair<std::string, AlgMap<F>>;

template <class F>
Named<F> named(Auto a, Space s = Space::Jordan27) { return {auto_name(a), named_auto<F>(a, s)}; }

/// g^3 = id, or g^3 = omega id and g^9 = id for the two outer-twisted E6 elements.
template <class F>
bool check_order3(Report& r, Auto a, Space s = Space::Jordan27) {
    const AlgMap<F> g = named_auto<F>(a, s);
    const AlgMap<F> c = power(g, 3);
    if (a == Auto::nu3 || a == Auto::mu3) {
        F sc;
        const bool central = c.matrix().is_scalar(&sc) && sc == K<F>::omega();
        const bool nine = power_is_identity(c, 3);
        return r.add("order " + auto_name(a), central && nine,
                     central ? (nine ? "cube is omega id, ninth power is id" : "cube is omega id but ninth power is not id")
                             : "cube is not omega id");
    }
    const bool ok = c.matrix().is_identity() && !g.matrix().is_identity();
    return r.add("order " + auto_name(a), ok, ok ? "order exactly 3" : "cube is not the identity");
}

template <class F>
bool check_member(Report& r, Algebra alg, const Named<F>& g) {
    const bool ok = member_of<F>(alg)(g.second);
    return r.add(g.first + " in " + group_name(alg), ok, ok ? "exact membership certificate" : "membership fails");
}

template <class F>
bool check_fixed_dim(Report& r, Algebra alg, const std::vector<Named<F>>& gs, int expected) {
    std::vector<AlgMap<F>> maps;
    std::string names;
    for (const auto& [n, g] : gs) {
        maps.push_back(g);
        names += (names.empty() ? "" : ", ") + n;
    }
    const int got = fixed_dim<F>(alg, maps);
    r.expected_dim = expected;
    r.computed_dim = got;
    return r.add("fixed dim " + std::string(algebra_name(alg)) + "^{" + names + "}", got == expected,
                 "computed " + std::to_string(got) + ", expected " + std::to_string(expected));
}

/// Every listed map sends to the identity; one check per element.
template <class F>
void check_kernel(Report& r, const std::vector<std::pair<std::string, std::function<AlgMap<F>()>>>& elems) {
    for (const auto& [label, build] : elems) {
        const AlgMap<F> m = build();
        const bool ok = m.matrix().is_identity();
        r.add("kernel " + label, ok, ok ? "maps to the identity" : detail::relation(m, AlgMap<F>::identity(m.space())));
    }
}

/// Homomorphism law on n sampled pairs, membership and centralizing of the images.
template <class F, class P>
void check_hom(Report& r, Sampler<F>& s, int n, const std::string& hom, const std::function<P(Sampler<F>&)>& draw,
               const std::function<P(const P&, const P&)>& mul, const std::function<AlgMap<F>(const P&)>& phi,
               Algebra alg, const std::vector<Named<F>>& centralizes) {
    int law = 0, members = 0;
    std::vector<int> comm(centralizes.size(), 0);
    for (int k = 0; k < n; ++k) {
        const P x = draw(s), y = draw(s);
        const AlgMap<F> fx = phi(x), fy = phi(y);
        law += compose(fx, fy) == phi(mul(x, y)) ? 1 : 0;
        members += member_of<F>(alg)(fx) && member_of<F>(alg)(fy) ? 1 : 0;
        for (size_t c = 0; c < centralizes.size(); ++c)
            comm[c] += commutes(fx, centralizes[c].second) && commutes(fy, centralizes[c].second) ? 1 : 0;
    }
    const std::string of = " of " + std::to_string(n) + " sampled pairs";
    r.add(hom + " homomorphism law", law == n, std::to_string(law) + of);
    r.add(hom + " images in " + group_name(alg), members == n, std::to_string(members) + of);
    for (size_t c = 0; c < centralizes.size(); ++c)
        r.add(hom + " images commute with " + centralizes[c].first, comm[c] == n, std::to_string(comm[c]) + of);
}

namespace detail {

template <class M>
bool same(const M& a, const M& b) {
    if constexpr (requires { a.value(); }) return a.value() == b.value();
    else return a == b;
}

}  // namespace detail

/// Homomorphism law of a block embedding into matrices.
template <class F, class P, class M>
void check_embedding_law(Report& r, Sampler<F>& s, int n, const std::string& name,
                         const std::function<P(Sampler<F>&)>& draw, const std::function<P(const P&, const P&)>& mul,
                         const std::function<M(const P&)>& embed, const std::function<M(const M&, const M&)>& mmul) {
    int ok = 0;
    for (int k = 0; k < n; ++k) {
        const P x = draw(s), y = draw(s);
        ok += detail::same(mmul(embed(x), embed(y)), embed(mul(x, y))) ? 1 : 0;
    }
    r.add(name + " homomorphism law", ok == n, std::to_string(ok) + " of " + std::to_string(n) + " sampled pairs");
}

/// x delta == delta y
template <class F>
bool check_conjugacy(Report& r, Auto x, Auto delta, Auto y) {
    const AlgMap<F> lhs = compose(named_auto<F>(x), named_auto<F>(delta));
    const AlgMap<F> rhs = compose(named_auto<F>(delta), named_auto<F>(y));
    const std::string rel = detail::relation(lhs, rhs);
    return r.add(auto_name(x) + " " + auto_name(delta) + " = " + auto_name(delta) + " " + auto_name(y), rel.empty(),
                 rel.empty() ? "exact matrix identity" : rel);
}

template <class F>
bool check_commutes(Report& r, const Named<F>& a, const Named<F>& b) {
    const bool ok = commutes(a.second, b.second);
    return r.add(a.first + " commutes with " + b.first, ok, ok ? "exact" : "does not commute");
}

// ---------------------------------------------------------------- parameter products

namespace detail {

template <class F>
UnitQuat<F> mul(const UnitQuat<F>& a, const UnitQuat<F>& b) { return UnitQuat<F>(a.value() * b.value()); }
template <class F>
UnitCx<F> mul(const UnitCx<F>& a, const UnitCx<F>& b) { return UnitCx<F>(a.value() * b.value()); }
template <class F>
UnitField<F> mul(const UnitField<F>& a, const UnitField<F>& b) { return UnitField<F>(a.value() * b.value()); }
template <class F>
SU3Cx<F> mul(const SU3Cx<F>& a, const SU3Cx<F>& b) { return SU3Cx<F>(mat3_mul(a.value(), b.value())); }
template <class F>
U3Cx<F> mul(const U3Cx<F>& a, const U3Cx<F>& b) { return U3Cx<F>(mat3_mul(a.value(), b.value())); }
template <class F>
SpMat3<F> mul(const SpMat3<F>& a, const SpMat3<F>& b) { return SpMat3<F>(mat3_mul(a.value(), b.value())); }
template <class F>
SUMat<F> mul(const SUMat<F>& a, const SUMat<F>& b) { return SUMat<F>(a.n(), a.value() * b.value()); }
template <class F>
U2Cx<F> mul(const U2Cx<F>& a, const U2Cx<F>& b) {
    CMat2<F> r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a.value()[i][0] * b.value()[0][j] + a.value()[i][1] * b.value()[1][j];
    return U2Cx<F>(r);
}

template <class F>
UnitField<F> ufield(const F& x) { return UnitField<F>(x); }
template <class F>
SUMat<F> su_scalar(int n, const F& x) { return SUMat<F>(n, x * Matrix<F>::identity(n)); }

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace detail

/// Per-run sampler seed, so suites draw independent deterministic streams.
inline std::uint64_t stream_seed(std::uint64_t seed, const std::string& id) { return seed * 0x9E3779B97F4A7C15ULL ^ detail::fnv1a(id); }

// ---------------------------------------------------------------- supporting suites

struct SuiteInfo {
    std::string id;
    std::string summary;
};

inline const std::vector<SuiteInfo>& lemma_suites() {
    static const std::vector<SuiteInfo> s = {
        {"g2-gamma-hom", "Sp(1) x Sp(1) onto the gamma-fixed subgroup of G2"},
        {"g2-gamma3-centralizer", "gamma3 in G2 and its fixed subalgebra (dim 4)"},
        {"g2-w3-hom", "SU(3) onto the w3-fixed subgroup of G2"},
        {"g2-w3-centralizer", "w3 in G2 and its fixed subalgebra (dim 8)"},
        {"g2-relations", "gamma3 and w3 through both G2 homomorphisms"},
        {"f4-gamma-hom", "Sp(1) x Sp(3) onto the gamma-fixed subgroup of F4"},
        {"f4-gamma3-centralizer", "gamma3 in F4 and its fixed subalgebra (dim 22)"},
        {"f4-sigma-centralizer", "sigma in F4, D(-1) = sigma, fixed subalgebra (dim 36)"},
        {"f4-sigma3-centralizer", "the U(1) family D_a, D(omega) = sigma3, fixed subalgebra (dim 22)"},
        {"f4-w3-hom", "SU(3) x SU(3) onto the w3-fixed subgroup of F4"},
        {"f4-w3-centralizer", "w3 in F4 and its fixed subalgebra (dim 16)"},
        {"f4-relations", "gamma3, sigma3 and w3 through both F4 homomorphisms"},
        {"e6-gamma-hom", "Sp(1) x SU(6) onto the gamma-fixed subgroup of E6"},
        {"e6-gamma3-centralizer", "gamma3 in E6 and its fixed subalgebra (dim 36)"},
        {"e6-sigma-centralizer", "the U(1) family through sigma and its fixed subalgebra (dim 46)"},
        {"e6-sigma3-centralizer", "sigma3 in E6 and its fixed subalgebra (dim 30)"},
        {"e6-nu3-centralizer", "nu3 in E6, cube omega id, fixed subalgebra (dim 28)"},
        {"e6-mu3-centralizer", "mu3 in E6, cube omega id, fixed subalgebra equal to sigma's (dim 46)"},
        {"e6-w3-hom", "SU(3) x SU(3) x SU(3) onto the w3-fixed subgroup of E6"},
        {"e6-w3-centralizer", "w3 in E6 and its fixed subalgebra (dim 24)"},
        {"e6-relations", "gamma3, sigma3, mu3 and w3 through both E6 homomorphisms"},
        {"embed-sp1-u2", "Sp(1) x U(2) into Sp(3) for the (gamma3, sigma3) subgroup of F4"},
        {"embed-u1-u1", "U(1) x U(1) as diagonal SU(3) for the w3-type F4 cases"},
        {"embed-u2u2u2", "S(U(2) x U(2) x U(2)) from U(1)^2 x SU(2)^3"},
        {"embed-u1u5", "S(U(1) x U(5)) from U(1) x SU(5), with its Z5 kernel"},
        {"embed-u1u1u2u2", "S(U(1) x U(1) x U(2) x U(2)) from U(1)^3 x SU(2)^2"},
        {"embed-u3u3", "S(U(3) x U(3)) from U(1) x SU(3)^2"},
        {"embed-u1u2u3", "S(U(1) x U(2) x U(3)) from U(1)^2 x SU(2) x SU(3)"},
        {"f4-psi-stabilizer", "U(1) x U(3) into the (sigma3, w3) subgroup of F4 and the stabilizer claim"},
        {"conj-delta-R", "sigma3 deltaR = deltaR sigma3' and deltaR centralizes gamma3"},
        {"conj-delta-Q", "mu3 deltaQ = deltaQ mu3' and deltaQ centralizes gamma3"},
        {"conj-delta-N", "w3 deltaN = deltaN w3' and deltaN centralizes gamma3"},
        {"conj-sigma3p-nu3", "(sigma3, nu3) and (sigma3', nu3) through deltaR"},
        {"sigma3-in-sigma", "the sigma3-fixed subgroup of E6 lies in the sigma-fixed one"},
        {"conj-mu3p-nu3", "(mu3, nu3) and (mu3', nu3) through deltaQ"},
        {"conj-w3p-nu3", "(w3, nu3) and (w3', nu3) through deltaN"},
    };
    return s;
}

inline bool is_lemma_suite(const std::string& id) {
    for (const auto& s : lemma_suites())
        if (s.id == id) return true;
    return false;
}

namespace detail {

template <class F>
using Suite = std::function<void(Report&, Sampler<F>&, int)>;

template <class F>
struct SuiteBuilders {
    using C = Consts<F>;
    using S = Sampler<F>;
    using Kern = std::vector<std::pair<std::string, std::function<AlgMap<F>()>>>;

    static UnitQuat<F> cxq(S& s) { return s.unit_cx().as_unit_quat(); }
    static Cx<F> wc() { return C::omega_c(); }
    static F w() { return K<F>::omega(); }

    static std::map<std::string, Suite<F>> make() {
        std::map<std::string, Suite<F>> m;
        const Space O = Space::Cayley8;

        // ---- G2
        m["g2-gamma-hom"] = [O](Report& r, S& s, int n) {
            using P = std::pair<UnitQuat<F>, UnitQuat<F>>;
            check_hom<F, P>(
                r, s, n, "phi[g2-gamma]", [](S& x) { return P{x.unit_quat(), x.unit_quat()}; },
                [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; },
                [](const P& p) { return phi_g2_gamma(p.first, p.second); }, Algebra::g2,
                {named<F>(Auto::gamma, O)});
            const auto m1 = UnitQuat<F>(Quaternion<F>::scalar(F(-1)));
            check_kernel<F>(r, {{"(-1, -1)", [=] { return phi_g2_gamma(m1, m1); }}});
        };
        m["g2-gamma3-centralizer"] = [O](Report& r, S&, int) {
            check_member<F>(r, Algebra::g2, named<F>(Auto::gamma3, O));
            check_order3<F>(r, Auto::gamma3, O);
            check_fixed_dim<F>(r, Algebra::g2, {named<F>(Auto::gamma3, O)}, 4);
        };
        m["g2-w3-hom"] = [O](Report& r, S& s, int n) {
            using P = SU3Cx<F>;
            check_hom<F, P>(
                r, s, n, "phi[g2-w3]", [](S& x) { return x.su3cx(); }, [](const P& a, const P& b) { return mul(a, b); },
                [](const P& p) { return phi_g2_w3(p); }, Algebra::g2, {named<F>(Auto::w3, O)});
            check_kernel<F>(r, {{"E", [] { return phi_g2_w3(SU3Cx<F>::identity()); }}});
        };
        m["g2-w3-centralizer"] = [O](Report& r, S&, int) {
            check_member<F>(r, Algebra::g2, named<F>(Auto::w3, O));
            check_order3<F>(r, Auto::w3, O);
            check_fixed_dim<F>(r, Algebra::g2, {named<F>(Auto::w3, O)}, 8);
        };
        m["g2-relations"] = [](Report& r, S&, int) {
            check_formulas<F>(r, "g2-gamma");
            check_formulas<F>(r, "g2-w3");
        };

        // ---- F4
        m["f4-gamma-hom"] = [](Report& r, S& s, int n) {
            using P = std::pair<UnitQuat<F>, SpMat3<F>>;
            check_hom<F, P>(
                r, s, n, "phi[f4-gamma]", [](S& x) { return P{x.unit_quat(), x.sp3()}; },
                [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; },
                [](const P& p) { return phi_f4_gamma(p.first, p.second); }, Algebra::f4,
                {named<F>(Auto::gamma)});
            const auto m1 = UnitQuat<F>(Quaternion<F>::scalar(F(-1)));
            check_kernel<F>(r, {{"(-1, -E)", [=] {
                                     return phi_f4_gamma(m1, SpMat3<F>(mat3_scalar(Quaternion<F>::scalar(F(-1)))));
                                 }}});
        };
        m["f4-gamma3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::f4, named<F>(Auto::gamma3));
            check_order3<F>(r, Auto::gamma3);
            check_fixed_dim<F>(r, Algebra::f4, {named<F>(Auto::gamma3)}, 22);
        };
        m["f4-sigma-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::f4, named<F>(Auto::sigma));
            const bool inv = power_is_identity(named_auto<F>(Auto::sigma), 2);
            r.add("sigma squared is id", inv, inv ? "exact" : "sigma^2 != id");
            const bool d = D(UnitCx<F>(Cx<F>::scalar(F(-1)))) == named_auto<F>(Auto::sigma);
            r.add("D(-1) = sigma", d, d ? "exact matrix identity" : "differs");
            check_fixed_dim<F>(r, Algebra::f4, {named<F>(Auto::sigma)}, 36);
        };
        m["f4-sigma3-centralizer"] = [](Report& r, S& s, int n) {
            using P = UnitCx<F>;
            check_hom<F, P>(
                r, s, n, "D", [](S& x) { return x.unit_cx(); }, [](const P& a, const P& b) { return mul(a, b); },
                [](const P& p) { return D(p); }, Algebra::f4, {named<F>(Auto::sigma3), named<F>(Auto::sigma)});
            const bool dw = D(UnitCx<F>(wc())) == named_auto<F>(Auto::sigma3);
            r.add("D(omega) = sigma3", dw, dw ? "exact matrix identity" : "differs");
            check_order3<F>(r, Auto::sigma3);
            check_fixed_dim<F>(r, Algebra::f4, {named<F>(Auto::sigma3)}, 22);
        };
        m["f4-w3-hom"] = [](Report& r, S& s, int n) {
            using P = std::pair<SU3Cx<F>, SU3Cx<F>>;
            check_hom<F, P>(
                r, s, n, "phi[f4-w3]", [](S& x) { return P{x.su3cx(), x.su3cx()}; },
                [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; },
                [](const P& p) { return phi_f4_w3(p.first, p.second); }, Algebra::f4, {named<F>(Auto::w3)});
            const auto W = SU3Cx<F>::scalar(wc()), Wb = SU3Cx<F>::scalar(wc().bar());
            check_kernel<F>(r, {{"(omega E, omega E)", [=] { return phi_f4_w3(W, W); }},
                                {"(omega^-1 E, omega^-1 E)", [=] { return phi_f4_w3(Wb, Wb); }}});
        };
        m["f4-w3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::f4, named<F>(Auto::w3));
            check_order3<F>(r, Auto::w3);
            check_fixed_dim<F>(r, Algebra::f4, {named<F>(Auto::w3)}, 16);
        };
        m["f4-relations"] = [](Report& r, S&, int) {
            check_formulas<F>(r, "f4-gamma");
            check_formulas<F>(r, "f4-w3");
            for (auto a : {Auto::gamma3, Auto::w3}) {
                const bool ok = named_auto<F>(a) == g2_to_f4(named_auto<F>(a, Space::Cayley8));
                r.add(auto_name(a) + " on J extends " + auto_name(a) + " on the octonions", ok, ok ? "exact" : "differs");
            }
        };

        // ---- E6
        m["e6-gamma-hom"] = [](Report& r, S& s, int n) {
            using P = std::pair<UnitQuat<F>, SUMat<F>>;
            check_hom<F, P>(
                r, s, n, "phi[e6-gamma]", [](S& x) { return P{x.unit_quat(), x.su(6)}; },
                [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; },
                [](const P& p) { return phi_e6_gamma(p.first, p.second); }, Algebra::e6,
                {named<F>(Auto::gamma)});
            const auto m1 = UnitQuat<F>(Quaternion<F>::scalar(F(-1)));
            check_kernel<F>(r, {{"(-1, -E)", [=] { return phi_e6_gamma(m1, su_scalar<F>(6, F(-1))); }}});
        };
        m["e6-gamma3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::e6, named<F>(Auto::gamma3));
            check_order3<F>(r, Auto::gamma3);
            check_fixed_dim<F>(r, Algebra::e6, {named<F>(Auto::gamma3)}, 36);
        };
        m["e6-sigma-centralizer"] = [](Report& r, S& s, int n) {
            using P = UnitField<F>;
            check_hom<F, P>(
                r, s, n, "phi[e6-sigma]", [](S& x) { return x.unit_field(); },
                [](const P& a, const P& b) { return mul(a, b); }, [](const P& p) { return phi6sigma(p); }, Algebra::e6,
                {named<F>(Auto::sigma)});
            const bool ok = phi6sigma(UnitField<F>(F(-1))) == named_auto<F>(Auto::sigma);
            r.add("phi[e6-sigma](-1) = sigma", ok, ok ? "exact matrix identity" : "differs");
            check_fixed_dim<F>(r, Algebra::e6, {named<F>(Auto::sigma)}, 46);
        };
        m["e6-sigma3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::e6, named<F>(Auto::sigma3));
            check_order3<F>(r, Auto::sigma3);
            check_fixed_dim<F>(r, Algebra::e6, {named<F>(Auto::sigma3)}, 30);
        };
        m["e6-nu3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::e6, named<F>(Auto::nu3));
            check_order3<F>(r, Auto::nu3);
            const bool real = ad_preserves_real_span(e6_basis<F>(), named_auto<F>(Auto::nu3));
            r.add("Ad(nu3) preserves the compact real form", real, real ? "exact" : "fails");
            check_fixed_dim<F>(r, Algebra::e6, {named<F>(Auto::nu3)}, 28);
        };
        m["e6-mu3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::e6, named<F>(Auto::mu3));
            check_order3<F>(r, Auto::mu3);
            const bool same = same_fixed_subspace<F>(Algebra::e6, {named_auto<F>(Auto::mu3)}, {named_auto<F>(Auto::sigma)});
            r.add("fixed subalgebra of mu3 equals that of sigma", same, same ? "equal subspaces" : "subspaces differ");
            check_fixed_dim<F>(r, Algebra::e6, {named<F>(Auto::mu3)}, 46);
        };
        m["e6-w3-hom"] = [](Report& r, S& s, int n) {
            struct P {
                SU3Cx<F> L, A, B;
            };
            check_hom<F, P>(
                r, s, n, "phi[e6-w3]", [](S& x) { return P{x.su3cx(), x.su3cx(), x.su3cx()}; },
                [](const P& a, const P& b) { return P{mul(a.L, b.L), mul(a.A, b.A), mul(a.B, b.B)}; },
                [](const P& p) { return phi_e6_w3(p.L, p.A, p.B); }, Algebra::e6, {named<F>(Auto::w3)});
            const auto W = SU3Cx<F>::scalar(wc()), Wb = SU3Cx<F>::scalar(wc().bar());
            check_kernel<F>(r, {{"(omega E, omega E, omega E)", [=] { return phi_e6_w3(W, W, W); }},
                                {"(omega^-1 E, omega^-1 E, omega^-1 E)", [=] { return phi_e6_w3(Wb, Wb, Wb); }}});
        };
        m["e6-w3-centralizer"] = [](Report& r, S&, int) {
            check_member<F>(r, Algebra::e6, named<F>(Auto::w3));
            check_order3<F>(r, Auto::w3);
            check_fixed_dim<F>(r, Algebra::e6, {named<F>(Auto::w3)}, 24);
        };
        m["e6-relations"] = [](Report& r, S&, int) {
            check_formulas<F>(r, "e6-gamma");
            check_formulas<F>(r, "e6-w3");
            // representative of mu3 in the gamma-type image, paired as the sigma3/w3 formulas force
            const F nu = K<F>::nu(), ni = nu.inv(), n2 = nu * nu;
            const auto alt = phi_e6_gamma(UnitQuat<F>::one(), SUMat<F>(6, Matrix<F>::diagonal({n2, n2, ni, ni, ni, ni})));
            const std::string rel = relation(alt, named_auto<F>(Auto::mu3));
            r.add("mu3 = phi[e6-gamma](1, diag(nu^2, nu^2, nu^-1, nu^-1, nu^-1, nu^-1))", rel.empty(),
                  rel.empty() ? "exact matrix identity" : rel);
        };

        // ---- embeddings
        m["embed-sp1-u2"] = [](Report& r, S& s, int n) {
            using P = std::pair<UnitQuat<F>, U2Cx<F>>;
            auto draw = [](S& x) { return P{x.unit_quat(), x.u2cx()}; };
            auto pm = [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; };
            check_embedding_law<F, P, SpMat3<F>>(
                r, s, n, "twist_e2 embed_sp1_u2", draw, pm, [](const P& p) { return twist_e2(embed_sp1_u2(p.first, p.second)); },
                [](const SpMat3<F>& a, const SpMat3<F>& b) { return mul(a, b); });
            using T = std::pair<UnitQuat<F>, P>;
            check_hom<F, T>(
                r, s, n, "phi[f4-gamma] on U(1) x Sp(1) x U(2)", [&](S& x) { return T{cxq(x), draw(x)}; },
                [&](const T& a, const T& b) { return T{mul(a.first, b.first), pm(a.second, b.second)}; },
                [](const T& t) { return phi_f4_gamma(t.first, twist_e2(embed_sp1_u2(t.second.first, t.second.second))); },
                Algebra::f4, {named<F>(Auto::gamma3), named<F>(Auto::sigma3)});
            check_kernel<F>(r, {{"(-1, -1, -E)", [] {
                                     const auto m1 = UnitQuat<F>(Quaternion<F>::scalar(F(-1)));
                                     CMat2<F> u{};
                                     u[0][0] = u[1][1] = Cx<F>::scalar(F(-1));
                                     return phi_f4_gamma(m1, twist_e2(embed_sp1_u2(m1, U2Cx<F>(u))));
                                 }}});
        };
        m["embed-u1-u1"] = [](Report& r, S& s, int n) {
            using P = std::pair<UnitCx<F>, UnitCx<F>>;
            check_embedding_law<F, P, SU3Cx<F>>(
                r, s, n, "embed_u1_u1", [](S& x) { return P{x.unit_cx(), x.unit_cx()}; },
                [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; },
                [](const P& p) { return embed_u1_u1(p.first, p.second); },
                [](const SU3Cx<F>& a, const SU3Cx<F>& b) { return mul(a, b); });
            const auto w1 = UnitCx<F>(wc()), w2 = UnitCx<F>(wc().bar());
            const auto W = SU3Cx<F>::scalar(wc()), Wb = SU3Cx<F>::scalar(wc().bar());
            check_kernel<F>(r, {{"(omega, omega, omega E) with embed_u1_u1 as B", [=] { return phi_f4_w3(embed_u1_u1(w1, w1), W); }},
                                {"(omega^-1, omega^-1, omega^-1 E) with embed_u1_u1 as B",
                                 [=] { return phi_f4_w3(embed_u1_u1(w2, w2), Wb); }},
                                {"(omega E, omega, omega) with embed_u1_u1 as A", [=] { return phi_f4_w3(W, embed_u1_u1(w1, w1)); }}});
        };
        m["embed-u2u2u2"] = [](Report& r, S& s, int n) {
            struct P {
                UnitField<F> a, b;
                SUMat<F> A, B, C;
            };
            check_embedding_law<F, P, Matrix<F>>(
                r, s, n, "embed_u2u2u2", [](S& x) { return P{x.unit_field(), x.unit_field(), x.su(2), x.su(2), x.su(2)}; },
                [](const P& x, const P& y) {
                    return P{mul(x.a, y.a), mul(x.b, y.b), mul(x.A, y.A), mul(x.B, y.B), mul(x.C, y.C)};
                },
                [](const P& p) { return embed_u2u2u2(p.a, p.b, p.A, p.B, p.C).value(); },
                [](const Matrix<F>& a, const Matrix<F>& b) { return a * b; });
            embed_kernel(r, "embed_u2u2u2", {{"(1, -1, E, -E, E) as listed", {1, -1, 1, -1, 1}},
                                     {"(-1, 1, -E, E, E) as listed", {-1, 1, -1, 1, 1}},
                                     {"(1, -1, E, -E, -E)", {1, -1, 1, -1, -1}},
                                     {"(-1, 1, -E, E, -E)", {-1, 1, -1, 1, -1}},
                                     {"(-1, -1, -E, -E, E)", {-1, -1, -1, -1, 1}}});
        };
        m["embed-u1u5"] = [](Report& r, S& s, int n) {
            using P = std::pair<UnitField<F>, SUMat<F>>;
            check_embedding_law<F, P, Matrix<F>>(
                r, s, n, "embed_u1u5", [](S& x) { return P{x.unit_field(), x.su(5)}; },
                [](const P& a, const P& b) { return P{mul(a.first, b.first), mul(a.second, b.second)}; },
                [](const P& p) { return embed_u1u5(p.first, p.second).value(); },
                [](const Matrix<F>& a, const Matrix<F>& b) { return a * b; });
            // fifth roots of unity need conductor 180
            using G = Cyc180;
            int ok = 0;
            for (int k = 0; k < 5; ++k) {
                const G e = root_of_unity<G>(k, 5);
                ok += embed_u1u5(UnitField<G>(e), SUMat<G>(5, e.inv() * Matrix<G>::identity(5))).value().is_identity() ? 1 : 0;
            }
            r.add("kernel (eps5^k, eps5^-k E), k = 0..4", ok == 5,
                  std::to_string(ok) + " of 5 map to E, computed over Q(zeta_180)");
        };
        m["embed-u1u1u2u2"] = [](Report& r, S& s, int n) {
            struct P {
                UnitField<F> a, b, c;
                SUMat<F> A, B;
            };
            check_embedding_law<F, P, Matrix<F>>(
                r, s, n, "embed_u1u1u2u2",
                [](S& x) { return P{x.unit_field(), x.unit_field(), x.unit_field(), x.su(2), x.su(2)}; },
                [](const P& x, const P& y) {
                    return P{mul(x.a, y.a), mul(x.b, y.b), mul(x.c, y.c), mul(x.A, y.A), mul(x.B, y.B)};
                },
                [](const P& p) { return embed_u1u1u2u2(p.a, p.b, p.c, p.A, p.B).value(); },
                [](const Matrix<F>& a, const Matrix<F>& b) { return a * b; });
            auto k = [](F a, F b, F c, F A, F B) {
                return embed_u1u1u2u2(ufield(a), ufield(b), ufield(c), su_scalar<F>(2, A), su_scalar<F>(2, B)).value().is_identity();
            };
            const std::vector<std::pair<std::string, bool>> list = {
                {"(1, -1, 1, E, -E)", k(1, -1, 1, 1, -1)},
                {"(1, -1, -1, -E, E)", k(1, -1, -1, -1, 1)},
                {"(-1, 1, 1, E, -E)", k(-1, 1, 1, 1, -1)}};
            for (const auto& [label, ok] : list) r.add("kernel " + label, ok, ok ? "maps to E" : "does not map to E");
        };
        m["embed-u3u3"] = [](Report& r, S& s, int n) {
            struct P {
                UnitField<F> a;
                SUMat<F> A, B;
            };
            check_embedding_law<F, P, Matrix<F>>(
                r, s, n, "embed_u3u3", [](S& x) { return P{x.unit_field(), x.su(3), x.su(3)}; },
                [](const P& x, const P& y) { return P{mul(x.a, y.a), mul(x.A, y.A), mul(x.B, y.B)}; },
                [](const P& p) { return embed_u3u3(p.a, p.A, p.B).value(); },
                [](const Matrix<F>& a, const Matrix<F>& b) { return a * b; });
            const F w = K<F>::omega(), wi = w.inv();
            auto k = [](F a, F A, F B) { return embed_u3u3(ufield(a), su_scalar<F>(3, A), su_scalar<F>(3, B)).value().is_identity(); };
            const std::vector<std::pair<std::string, bool>> list = {
                {"(omega, omega^-1 E, omega E)", k(w, wi, w)}, {"(omega^-1, omega E, omega^-1 E)", k(wi, w, wi)}};
            for (const auto& [label, ok] : list) r.add("kernel " + label, ok, ok ? "maps to E" : "does not map to E");
        };
        m["embed-u1u2u3"] = [](Report& r, S& s, int n) {
            struct P {
                UnitField<F> a, b;
                SUMat<F> A, B;
            };
            check_embedding_law<F, P, Matrix<F>>(
                r, s, n, "embed_u1u2u3", [](S& x) { return P{x.unit_field(), x.unit_field(), x.su(2), x.su(3)}; },
                [](const P& x, const P& y) { return P{mul(x.a, y.a), mul(x.b, y.b), mul(x.A, y.A), mul(x.B, y.B)}; },
                [](const P& p) { return embed_u1u2u3(p.a, p.b, p.A, p.B).value(); },
                [](const Matrix<F>& a, const Matrix<F>& b) { return a * b; });
            const F w = K<F>::omega(), wi = w.inv();
            auto k = [](F a, F b, F A, F B) {
                return embed_u1u2u3(ufield(a), ufield(b), su_scalar<F>(2, A), su_scalar<F>(3, B)).value().is_identity();
            };
            const std::vector<std::pair<std::string, bool>> list = {{"(-1, 1, -E, E)", k(-1, 1, -1, 1)},
                                                                    {"(1, omega, E, omega^-1 E)", k(1, w, 1, wi)}};
            for (const auto& [label, ok] : list) r.add("kernel " + label, ok, ok ? "maps to E" : "does not map to E");
        };

        // ---- the U(1) x U(3) parametrization of the (sigma3, w3) subgroup of F4
        m["f4-psi-stabilizer"] = [](Report& r, S& s, int n) {
            const auto s3 = named_auto<F>(Auto::sigma3), w3 = named_auto<F>(Auto::w3);
            Octonion<F> e1;
            e1.c[1] = F(1);
            const std::vector<JordanElem<F>> targets = {JordanElem<F>::E(1), JordanElem<F>::Fi(1, Octonion<F>::scalar(F(1))),
                                                        JordanElem<F>::Fi(1, e1)};
            int in = 0, cs = 0, cw = 0, stab = 0, law = 0;
            for (int k = 0; k < n; ++k) {
                const auto a = s.unit_cx(), b = s.unit_cx();
                const auto U = s.u3cx(), V = s.u3cx();
                const AlgMap<F> x = psi(a, U), y = psi(b, V);
                in += is_f4(x) ? 1 : 0;
                cs += commutes(x, s3) ? 1 : 0;
                cw += commutes(x, w3) ? 1 : 0;
                stab += stabilizes(phi_f4_gamma(UnitQuat<F>::one(), SpMat3<F>(cx_to_qmat(U.value()))), targets) ? 1 : 0;
                law += compose(x, y) == psi(mul(a, b), mul(U, V)) ? 1 : 0;
            }
            const std::string of = " of " + std::to_string(n) + " samples";
            r.add("psi images in F4", in == n, std::to_string(in) + of);
            r.add("psi images commute with w3", cw == n, std::to_string(cw) + of);
            r.add("psi images commute with sigma3", cs == n,
                  std::to_string(cs) + of + (cs == n ? "" : "; phi[f4-gamma](1, U) commutes with sigma3 only for diagonal U"));
            r.add("phi[f4-gamma](1, U) fixes E1, F1(1), F1(e1) for U in U(3)", stab == n,
                  std::to_string(stab) + of + (stab == n ? "" : "; U E1 U* = E1 needs U to fix the first axis"));
            r.add("psi homomorphism law", law == n,
                  std::to_string(law) + of + (law == n ? "" : "; D_a does not commute with phi[f4-gamma](1, U)"));
            const auto w1 = UnitCx<F>(wc()), w2 = UnitCx<F>(wc().bar());
            auto sc = [](const Cx<F>& c) { return U3Cx<F>(mat3_scalar(c)); };
            check_kernel<F>(r, {{"psi(omega, omega^-1 E)", [=] { return psi(w1, sc(wc().bar())); }},
                                {"psi(omega^-1, omega E)", [=] { return psi(w2, sc(wc())); }}});
        };

        // ---- conjugacies through deltaR, deltaQ, deltaN
        auto conj_suite = [](Auto x, Auto delta, Auto xp, Auto partner) {
            return [=](Report& r, S&, int) {
                check_conjugacy<F>(r, x, delta, xp);
                check_commutes<F>(r, named<F>(delta), named<F>(partner));
                check_member<F>(r, Algebra::e6, named<F>(delta));
                check_member<F>(r, Algebra::e6, named<F>(xp));
                check_commutes<F>(r, named<F>(xp), named<F>(partner));
                // conjugate pairs have equal joint fixed dims
                const int a = fixed_dim<F>(Algebra::e6, {named_auto<F>(partner), named_auto<F>(x)});
                const int b = fixed_dim<F>(Algebra::e6, {named_auto<F>(partner), named_auto<F>(xp)});
                r.add("joint fixed dims of (" + auto_name(partner) + ", " + auto_name(x) + ") and (" + auto_name(partner) +
                          ", " + auto_name(xp) + ") agree",
                      a == b, std::to_string(a) + " vs " + std::to_string(b));
            };
        };
        m["conj-delta-R"] = conj_suite(Auto::sigma3, Auto::deltaR, Auto::sigma3p, Auto::gamma3);
        m["conj-delta-Q"] = conj_suite(Auto::mu3, Auto::deltaQ, Auto::mu3p, Auto::gamma3);
        m["conj-delta-N"] = conj_suite(Auto::w3, Auto::deltaN, Auto::w3p, Auto::gamma3);
        m["conj-sigma3p-nu3"] = conj_suite(Auto::sigma3, Auto::deltaR, Auto::sigma3p, Auto::nu3);
        m["conj-mu3p-nu3"] = conj_suite(Auto::mu3, Auto::deltaQ, Auto::mu3p, Auto::nu3);
        m["conj-w3p-nu3"] = conj_suite(Auto::w3, Auto::deltaN, Auto::w3p, Auto::nu3);
        m["sigma3-in-sigma"] = [](Report& r, S& s, int n) {
            const auto sg = named_auto<F>(Auto::sigma), s3 = named_auto<F>(Auto::sigma3);
            check_commutes<F>(r, named<F>(Auto::sigma3), named<F>(Auto::sigma));
            // generators of the sigma3-fixed group: phi[e6-sigma], D_a and the gamma-type diagonal torus
            int ok = 0;
            for (int k = 0; k < n; ++k) {
                const AlgMap<F> g = compose(phi6sigma(s.unit_field()), D(s.unit_cx()));
                ok += commutes(g, s3) && commutes(g, sg) ? 1 : 0;
            }
            r.add("phi[e6-sigma](t) D_a commutes with sigma3 and sigma", ok == n,
                  std::to_string(ok) + " of " + std::to_string(n) + " samples");
            const int a = fixed_dim<F>(Algebra::e6, {s3});
            const int b = fixed_dim<F>(Algebra::e6, {s3, sg});
            r.add("fixed subalgebra of sigma3 lies in that of sigma", a == b,
                  "dim e6^{sigma3} = " + std::to_string(a) + ", dim e6^{sigma3, sigma} = " + std::to_string(b));
            r.expected_dim = 30;
            r.computed_dim = b;
        };
        return m;
    }

    static void embed_kernel(Report& r, const std::string& name,
                             const std::vector<std::pair<std::string, std::array<int, 5>>>& list) {
        for (const auto& [label, v] : list) {
            const bool ok = embed_u2u2u2(ufield<F>(F(v[0])), ufield<F>(F(v[1])), su_scalar<F>(2, F(v[2])),
                                 su_scalar<F>(2, F(v[3])), su_scalar<F>(2, F(v[4])))
                                .value()
                                .is_identity();
            r.add("kernel " + name + " " + label, ok, ok ? "maps to E" : "does not map to E");
        }
    }
};

template <class F>
const std::map<std::string, Suite<F>>& suite_table() {
    static const std::map<std::string, Suite<F>> t = SuiteBuilders<F>::make();
    return t;
}

}  // namespace detail

/// Runs one supporting suite; throws std::invalid_argument only for an unknown id.
template <class F>
Report run_lemma(const std::string& id, int samples, std::uint64_t seed) {
    const auto& t = detail::suite_table<F>();
    auto it = t.find(id);
    if (it == t.end()) throw std::invalid_argument("unknown lemma suite: " + id);
    Stopwatch sw;
    Report r;
    r.id = id;
    Sampler<F> s(stream_seed(seed, id));
    it->second(r, s, samples);
    r.elapsed_ms = sw.ms();
    return r;
}

}  // namespace z3z3
