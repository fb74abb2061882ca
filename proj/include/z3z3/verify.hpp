/**
 * @file verify.hpp
 * @brief Whole-suite runner, the dimension table, the self test and the
 *        markdown rendering of reports.
 *
 * Shared state (Lie bases, named automorphisms, product tensors) is built once
 * before any worker starts; after that every task reads it only. Results are
 * stored by task index, so output order never depends on scheduling.
 */
#pragma once

#include "z3z3/cases.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace z3z3 {

struct Agreement {
    int a, b;
    std::optional<int> dim_a, dim_b;
    [[nodiscard]] bool pass() const { return dim_a && dim_b && *dim_a == *dim_b; }
};

struct Summary {
    int cases_total = 0, cases_passed = 0;
    int lemmas_total = 0, lemmas_passed = 0;
    int checks_total = 0, checks_passed = 0;
    std::vector<Agreement> agreements;
    [[nodiscard]] bool passed() const {
        for (const auto& a : agreements)
            if (!a.pass()) return false;
        return cases_passed == cases_total && lemmas_passed == lemmas_total;
    }
};

struct RunAll {
    std::vector<Report> cases;
    std::vector<Report> lemmas;
    Summary summary;
    long long elapsed_ms = 0;
};

/// VERIFY_THREADS overrides the requested parallelism; at least 1.
inline int effective_threads(int requested) {
    if (const char* env = std::getenv("VERIFY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) requested = int(v);
    }
    return requested < 1 ? 1 : requested;
}

/// Builds every lazily cached object so that workers only read shared state.
template <class F>
void warm_up() {
    (void)octonion_tensor<F>();
    (void)circ_tensor<F>();
    (void)cross_tensor<F>();
    for (auto a : {Algebra::g2, Algebra::f4, Algebra::e6}) (void)lie_basis<F>(a);
    for (const auto& [a, name] : auto_names()) (void)named_auto<F>(a);
    for (auto a : {Auto::gamma, Auto::gamma3, Auto::w3}) (void)named_auto<F>(a, Space::Cayley8);
    (void)detail::suite_table<F>();
    (void)formulas<F>();
}

/// Runs tasks on n threads; result k always comes from task k.
template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& tasks, int threads) {
    std::vector<T> out(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < tasks.size();) out[k] = tasks[k]();
    };
    const int n = std::min<int>(threads, int(tasks.size()));
    if (n <= 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

template <class F>
RunAll run_all(int samples, std::uint64_t seed, int parallelism = 1) {
    Stopwatch sw;
    warm_up<F>();
    std::vector<std::function<Report()>> tasks;
    for (const auto& c : case_table()) tasks.push_back([=] { return run_case<F>(c.id, samples, seed); });
    for (const auto& l : lemma_suites()) tasks.push_back([=] { return run_lemma<F>(l.id, samples, seed); });
    std::vector<Report> all = run_parallel(tasks, effective_threads(parallelism));

    RunAll r;
    r.cases.assign(all.begin(), all.begin() + 14);
    r.lemmas.assign(all.begin() + 14, all.end());
    Summary& s = r.summary;
    for (const auto& c : r.cases) {
        ++s.cases_total;
        s.cases_passed += c.passed() ? 1 : 0;
    }
    for (const auto& l : r.lemmas) {
        ++s.lemmas_total;
        s.lemmas_passed += l.passed() ? 1 : 0;
    }
    for (const auto& rep : all) {
        s.checks_total += int(rep.checks.size());
        s.checks_passed += int(rep.checks.size()) - rep.failures();
    }
    // cases stated to have the same fixed group must agree in dimension
    for (auto [a, b] : {std::pair{9, 12}, std::pair{11, 14}})
        s.agreements.push_back({a, b, r.cases[size_t(a - 1)].computed_dim, r.cases[size_t(b - 1)].computed_dim});
    r.elapsed_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------- dimension table

struct DimRow {
    std::string kind;  // algebra, single or joint
    std::string label;
    int expected = 0, computed = 0;
    [[nodiscard]] bool pass() const { return expected == computed; }
};

template <class F>
std::vector<DimRow> dims_table() {
    std::vector<DimRow> rows;
    rows.push_back({"algebra", "g2", 14, lie_basis<F>(Algebra::g2).dim()});
    rows.push_back({"algebra", "f4", 52, lie_basis<F>(Algebra::f4).dim()});
    rows.push_back({"algebra", "e6", 78, lie_basis<F>(Algebra::e6).dim()});
    const std::vector<std::tuple<Algebra, Auto, int>> singles = {
        {Algebra::g2, Auto::gamma3, 4},  {Algebra::g2, Auto::w3, 8},     {Algebra::f4, Auto::gamma3, 22},
        {Algebra::f4, Auto::sigma3, 22}, {Algebra::f4, Auto::w3, 16},    {Algebra::e6, Auto::gamma3, 36},
        {Algebra::e6, Auto::sigma3, 30}, {Algebra::e6, Auto::nu3, 28},   {Algebra::e6, Auto::mu3, 46},
        {Algebra::e6, Auto::w3, 24}};
    for (const auto& [alg, a, want] : singles) {
        const Space sp = alg == Algebra::g2 ? Space::Cayley8 : Space::Jordan27;
        rows.push_back({"single", std::string(algebra_name(alg)) + "^" + auto_name(a), want,
                        fixed_dim<F>(alg, {named_auto<F>(a, sp)})});
    }
    for (const auto& c : case_table()) {
        const Space sp = case_space(c);
        rows.push_back({"joint",
                        "case " + std::to_string(c.id) + ": " + algebra_name(c.algebra) + "^{" + auto_name(c.sigma) +
                            ", " + auto_name(c.tau) + "}",
                        c.expected_dim,
                        fixed_dim<F>(c.algebra, {named_auto<F>(c.sigma, sp), named_auto<F>(c.tau, sp)})});
    }
    return rows;
}

// ---------------------------------------------------------------- self test

/// Fast internal consistency: field, octonion, Jordan and membership identities.
template <class F>
Report selftest() {
    Stopwatch sw;
    Report r;
    r.id = "selftest";
    auto add = [&r](const char* name, bool ok) { r.add(name, ok, ok ? "exact identity" : "identity fails"); };
    const F w = K<F>::omega();
    add("1 + omega + omega^2 = 0", (F(1) + w + w * w).is_zero());
    add("nu^9 = 1 and nu^3 = omega", pow(K<F>::nu(), 9) == F(1) && pow(K<F>::nu(), 3) == w);
    bool alt = true;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto x = Octonion<F>::basis(a), y = Octonion<F>::basis(b);
            alt = alt && (x * x) * y == x * (x * y) && (y * x) * x == y * (x * x);
        }
    add("octonions are alternative on basis pairs", alt);
    bool norm = true;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto x = Octonion<F>::basis(a) + F(2) * Octonion<F>::basis(b);
            const auto y = Octonion<F>::basis(b) + Octonion<F>::basis((a + 3) % 8);
            norm = norm && oct_norm(x * y) == oct_norm(x) * oct_norm(y);
        }
    add("octonion norm is multiplicative", norm);
    JordanElem<F> X = JordanElem<F>::E(1) + JordanElem<F>::Fi(1, Octonion<F>::basis(3)) +
                      F(2) * JordanElem<F>::Fi(2, Octonion<F>::basis(5)) + F(-1) * JordanElem<F>::E(3);
    const auto XX = circ(X, X);
    add("Jordan identity (X^2 o Y) o X = X^2 o (Y o X)",
          circ(circ(XX, JordanElem<F>::E(2)), X) == circ(XX, circ(JordanElem<F>::E(2), X)));
    const auto XxX = cross(X, X);
    add("(X x X) x (X x X) = det(X) X", cross(XxX, XxX) == det(X) * X);
    for (auto a : {Auto::gamma3, Auto::w3}) check_member<F>(r, Algebra::g2, named<F>(a, Space::Cayley8));
    for (auto a : {Auto::gamma3, Auto::sigma3, Auto::w3}) check_member<F>(r, Algebra::f4, named<F>(a));
    for (auto a : {Auto::nu3, Auto::mu3}) check_member<F>(r, Algebra::e6, named<F>(a));
    Sampler<F> s1(1), s2(1);
    r.add("sampler is deterministic", s1.su(3).value() == s2.su(3).value(), "equal draws from equal seeds");
    r.elapsed_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------- rendering

inline nlohmann::ordered_json to_json(const RunAll& r) {
    nlohmann::ordered_json agreements = nlohmann::ordered_json::array();
    for (const auto& a : r.summary.agreements)
        agreements.push_back({{"cases", {a.a, a.b}},
                              {"computed_dims", {detail::optional_int(a.dim_a), detail::optional_int(a.dim_b)}},
                              {"pass", a.pass()}});
    const Summary& s = r.summary;
    return {{"cases", r.cases},
            {"lemmas", r.lemmas},
            {"summary",
             {{"cases_passed", s.cases_passed},
              {"cases_total", s.cases_total},
              {"lemmas_passed", s.lemmas_passed},
              {"lemmas_total", s.lemmas_total},
              {"checks_passed", s.checks_passed},
              {"checks_total", s.checks_total},
              {"agreements", agreements},
              {"pass", s.passed()}}},
            {"elapsed_ms", r.elapsed_ms}};
}

inline nlohmann::ordered_json to_json(const std::vector<DimRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& d : rows)
        out.push_back({{"kind", d.kind}, {"label", d.label}, {"expected", d.expected}, {"computed", d.computed},
                       {"pass", d.pass()}});
    return out;
}

namespace detail {

inline std::string dim_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "-"; }

inline void failing_checks(std::ostringstream& o, const Report& r) {
    for (const auto& c : r.checks)
        if (!c.pass) o << "- **" << r.id << "** `" << c.name << "`: " << c.detail << "\n";
}

}  // namespace detail

/// One report as a checklist.
inline std::string to_markdown(const Report& r) {
    std::ostringstream o;
    o << "## " << (r.id.find_first_not_of("0123456789") == std::string::npos ? "Case " : "") << r.id << "\n\n";
    if (r.expected_dim || r.computed_dim)
        o << "expected dim " << detail::dim_text(r.expected_dim) << ", computed dim " << detail::dim_text(r.computed_dim)
          << "\n\n";
    o << "| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : r.checks) o << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.detail << " |\n";
    o << "\n**" << (r.passed() ? "PASS" : "FAIL") << "** (" << r.elapsed_ms << " ms)\n";
    return o.str();
}

/// Table layout: case, group, automorphisms, stated subgroup, dims, verdict.
inline std::string to_markdown(const RunAll& r) {
    std::ostringstream o;
    o << "# Z3 x Z3 symmetric spaces: verification\n\n";
    o << "| Case | G | automorphisms | expected K | expected dim | computed dim | verdict |\n";
    o << "|---|---|---|---|---|---|---|\n";
    for (const auto& rep : r.cases) {
        const CaseInfo& c = case_info(std::stoi(rep.id));
        o << "| " << c.id << " | " << group_name(c.algebra) << " | " << auto_name(c.sigma) << ", " << auto_name(c.tau)
          << " | " << c.group << " | " << detail::dim_text(rep.expected_dim) << " | "
          << detail::dim_text(rep.computed_dim) << " | " << (rep.passed() ? "pass" : "FAIL") << " |\n";
    }
    o << "\n| suite | summary | checks | verdict |\n|---|---|---|---|\n";
    for (size_t k = 0; k < r.lemmas.size(); ++k) {
        const Report& l = r.lemmas[k];
        std::string summary;
        for (const auto& s : lemma_suites())
            if (s.id == l.id) summary = s.summary;
        o << "| " << l.id << " | " << summary << " | " << (int(l.checks.size()) - l.failures()) << "/"
          << l.checks.size() << " | " << (l.passed() ? "pass" : "FAIL") << " |\n";
    }
    const Summary& s = r.summary;
    o << "\n## Summary\n\n";
    o << "- cases passed: " << s.cases_passed << "/" << s.cases_total << "\n";
    o << "- suites passed: " << s.lemmas_passed << "/" << s.lemmas_total << "\n";
    o << "- checks passed: " << s.checks_passed << "/" << s.checks_total << "\n";
    for (const auto& a : s.agreements)
        o << "- cases " << a.a << " and " << a.b << " agree in dimension: " << (a.pass() ? "yes" : "NO") << " ("
          << detail::dim_text(a.dim_a) << " vs " << detail::dim_text(a.dim_b) << ")\n";
    std::ostringstream f;
    for (const auto& rep : r.cases) detail::failing_checks(f, rep);
    for (const auto& rep : r.lemmas) detail::failing_checks(f, rep);
    if (!f.str().empty()) o << "\n## Failing checks\n\n" << f.str();
    return o.str();
}

inline std::string to_markdown(const std::vector<DimRow>& rows) {
    std::ostringstream o;
    o << "| kind | fixed subalgebra | expected | computed | verdict |\n|---|---|---|---|---|\n";
    for (const auto& d : rows)
        o << "| " << d.kind << " | " << d.label << " | " << d.expected << " | " << d.computed << " | "
          << (d.pass() ? "pass" : "FAIL") << " |\n";
    return o.str();
}

}  // namespace z3z3
