// Acceptance run: one PASS/FAIL line per criterion, each with its evidence.
//
// Lines report what was computed. Four criteria fail because the stated
// values are inconsistent with the defined automorphisms (see README). The
// exit status is 0 iff every criterion lands on its documented outcome, so an
// unexpected pass is flagged as loudly as an unexpected failure.

#include "z3z3/verify.hpp"

#include <cstdio>
#include <functional>
#include <set>

namespace {

using namespace z3z3;
using F = CycScalar;

constexpr int kSamples = 8;
constexpr std::uint64_t kSeed = 0;
const std::set<int> kDocumentedFailures = {3, 4, 6, 8};

struct Tally {
    int total = 0, passed = 0;
    std::vector<std::string> failures;

    void add(const std::string& where, const Check& c) {
        ++total;
        if (c.pass) ++passed;
        else failures.push_back(where + ": " + c.name + " (" + c.detail + ")");
    }
    void add(const std::string& where, const std::string& name, bool ok, const std::string& detail = {}) {
        add(where, Check{name, ok, detail});
    }
    [[nodiscard]] bool ok() const { return total > 0 && passed == total; }
    [[nodiscard]] std::string summary() const {
        std::string s = std::to_string(passed) + "/" + std::to_string(total) + " checks";
        for (size_t k = 0; k < failures.size() && k < 3; ++k) s += "; " + failures[k];
        if (failures.size() > 3) s += "; +" + std::to_string(failures.size() - 3) + " more";
        return s;
    }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool contains(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

struct Outcome {
    int id;
    bool pass;
    std::string detail;
};

std::vector<Outcome> outcomes;

void report(int id, bool pass, double seconds, double limit, const std::string& detail) {
    const bool in_time = seconds <= limit;
    char t[64];
    std::snprintf(t, sizeof t, "%.1f s of %.0f s", seconds, limit);
    const bool ok = pass && in_time;
    std::printf("criterion %2d: %s  [%s] %s\n", id, ok ? "PASS" : "FAIL", t, detail.c_str());
    std::fflush(stdout);
    outcomes.push_back({id, ok, detail});
}

double seconds_of(const Stopwatch& sw) { return double(sw.ms()) / 1000.0; }

const Report& lemma(const RunAll& all, const std::string& id) {
    for (const auto& r : all.lemmas)
        if (r.id == id) return r;
    throw std::logic_error("missing suite " + id);
}

}  // namespace

int main() {
    Stopwatch total;
    warm_up<F>();

    // 10 first: the full run feeds several other criteria.
    Stopwatch run_sw;
    const RunAll all = run_all<F>(kSamples, kSeed, 1);
    const double run_s = seconds_of(run_sw);
    const RunAll again = run_all<F>(kSamples, kSeed, 1);
    bool deterministic = all.cases.size() == again.cases.size() && all.lemmas.size() == again.lemmas.size();
    for (size_t k = 0; deterministic && k < all.cases.size(); ++k)
        deterministic = all.cases[k].same_content(again.cases[k]);
    for (size_t k = 0; deterministic && k < all.lemmas.size(); ++k)
        deterministic = all.lemmas[k].same_content(again.lemmas[k]);

    {
        Stopwatch sw;
        Tally t;
        t.add("g2", "dim of the derivation algebra of the octonions",
              derivation_nullity(octonion_tensor<F>(), false) == 14);
        t.add("g2", "basis size", lie_basis<F>(Algebra::g2).dim() == 14);
        t.add("f4", "dim of the derivation algebra of the Jordan algebra",
              derivation_nullity(circ_tensor<F>(), true) == 52);
        t.add("f4", "basis size", lie_basis<F>(Algebra::f4).dim() == 52);
        const auto& e6 = lie_basis<F>(Algebra::e6);
        bool derivs = true;
        for (const auto& D : e6.elems) derivs = derivs && is_e6_derivation(D);
        t.add("e6", "basis size", e6.dim() == 78);
        t.add("e6", "every basis element is an infinitesimal E6 map", derivs);
        report(1, t.ok(), seconds_of(sw), 60, "dims 14, 52, 78; " + t.summary());
    }

    {
        Stopwatch sw;
        Tally t;
        const std::vector<std::tuple<Algebra, Auto, int>> rows = {
            {Algebra::g2, Auto::gamma3, 4},  {Algebra::g2, Auto::w3, 8},      {Algebra::f4, Auto::gamma3, 22},
            {Algebra::f4, Auto::sigma3, 22}, {Algebra::f4, Auto::w3, 16},     {Algebra::e6, Auto::gamma3, 36},
            {Algebra::e6, Auto::sigma3, 30}, {Algebra::e6, Auto::nu3, 28},    {Algebra::e6, Auto::mu3, 46},
            {Algebra::e6, Auto::w3, 24}};
        std::string dims;
        for (const auto& [alg, a, want] : rows) {
            const Space sp = alg == Algebra::g2 ? Space::Cayley8 : Space::Jordan27;
            const int got = fixed_dim<F>(alg, {named_auto<F>(a, sp)});
            dims += (dims.empty() ? "" : " ") + std::to_string(got);
            t.add(algebra_name(alg), "fixed dim of " + auto_name(a), got == want,
                  "computed " + std::to_string(got) + ", expected " + std::to_string(want));
        }
        report(2, t.ok(), seconds_of(sw), 600, "dims " + dims + "; " + t.summary());
    }

    {
        Tally t;
        std::string dims;
        long long ms = 0;
        for (const auto& r : all.cases) {
            ms += r.elapsed_ms;
            const Check* c = r.find("joint fixed dim");
            dims += (dims.empty() ? "" : " ") + (r.computed_dim ? std::to_string(*r.computed_dim) : "?");
            t.add("case " + r.id, *c);
        }
        report(3, t.ok(), double(ms) / 1000.0, 900, "computed " + dims + "; " + t.summary());
    }

    {
        Tally t;
        long long ms = 0;
        for (const auto* id : {"g2-relations", "f4-relations", "e6-relations"}) {
            const Report& r = lemma(all, id);
            ms += r.elapsed_ms;
            for (const auto& c : r.checks)
                if (starts_with(c.name, "formula ")) t.add(id, c);
        }
        report(4, t.ok() && t.total == int(formulas<F>().size()), double(ms) / 1000.0, 10, t.summary());
    }

    {
        Stopwatch sw;
        Tally t;
        for (auto a : {Auto::gamma3, Auto::sigma3, Auto::w3, Auto::nu3, Auto::mu3}) {
            Report r;
            check_order3<F>(r, a, Space::Jordan27);
            t.add("e6", r.checks.front());
        }
        for (auto a : {Auto::gamma3, Auto::w3}) {
            Report r;
            check_order3<F>(r, a, Space::Cayley8);
            t.add("g2", r.checks.front());
        }
        for (const auto& info : case_table()) {
            const Space sp = case_space(info);
            const bool ok = commutes(named_auto<F>(info.sigma, sp), named_auto<F>(info.tau, sp));
            t.add("case " + std::to_string(info.id), auto_name(info.sigma) + " commutes with " + auto_name(info.tau),
                  ok);
        }
        report(5, t.ok(), seconds_of(sw), 10, t.summary());
    }

    {
        Tally t;
        long long ms = 0;
        for (const auto* id : {"conj-delta-R", "conj-delta-Q", "conj-delta-N", "conj-sigma3p-nu3", "conj-mu3p-nu3",
                               "conj-w3p-nu3"}) {
            const Report& r = lemma(all, id);
            ms += r.elapsed_ms;
            for (const auto& c : r.checks)
                if (contains(c.name, "delta")) t.add(id, c);
        }
        report(6, t.ok(), double(ms) / 1000.0, 5, t.summary());
    }

    {
        Stopwatch sw;
        Tally t;
        t.add("e6", "fixed subalgebra of mu3 equals that of sigma",
              same_fixed_subspace<F>(Algebra::e6, {named_auto<F>(Auto::mu3)}, {named_auto<F>(Auto::sigma)}));
        t.add("e6", "joint (sigma3, mu3) fixed subalgebra equals that of sigma3",
              same_fixed_subspace<F>(Algebra::e6, {named_auto<F>(Auto::sigma3), named_auto<F>(Auto::mu3)},
                                     {named_auto<F>(Auto::sigma3)}));
        report(7, t.ok(), seconds_of(sw), 300, t.summary());
    }

    {
        Tally t;
        long long ms = 0;
        for (const auto& r : all.lemmas) {
            const bool hom_suite = contains(r.id, "-hom") || starts_with(r.id, "embed-") ||
                                   r.id == "f4-sigma3-centralizer" || r.id == "e6-sigma-centralizer";
            if (!hom_suite) continue;
            ms += r.elapsed_ms;
            for (const auto& c : r.checks)
                if (starts_with(c.name, "kernel") || contains(c.name, "homomorphism law")) t.add(r.id, c);
        }
        for (const auto& r : all.cases)
            for (const auto& c : r.checks)
                if (starts_with(c.name, "kernel")) t.add("case " + r.id, c);
        report(8, t.ok(), double(ms) / 1000.0, 300, t.summary());
    }

    {
        Tally t;
        long long ms = 0;
        for (const auto& r : all.cases) {
            ms += r.elapsed_ms;
            for (const auto& c : r.checks)
                if (starts_with(c.name, "sampled images in")) t.add("case " + r.id, c);
        }
        report(9, t.ok() && t.total == 14, double(ms) / 1000.0, 600,
               std::to_string(kSamples) + " samples per case; " + t.summary());
    }

    report(10, deterministic, run_s, 2700,
           std::string(deterministic ? "two runs with seed 0 agree" : "two runs with seed 0 differ") +
               " apart from timings");

    bool as_documented = true;
    for (const auto& o : outcomes) {
        const bool expected_pass = kDocumentedFailures.count(o.id) == 0;
        if (o.pass != expected_pass) {
            as_documented = false;
            std::printf("criterion %2d: unexpected %s\n", o.id, o.pass ? "PASS" : "FAIL");
        }
    }
    int passed = 0;
    for (const auto& o : outcomes) passed += o.pass ? 1 : 0;
    std::printf("%d of %zu criteria pass; outcome %s the documented expectation (%.1f s)\n", passed, outcomes.size(),
                as_documented ? "matches" : "DOES NOT match", seconds_of(total));
    return as_documented ? 0 : 1;
}
