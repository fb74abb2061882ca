// verify: command-line front end for the Z3 x Z3 verification suites.
//
//   verify case <1..14> | lemma <id> | all | dims | selftest
//          [--samples N] [--seed S] [--conductor 36|180]
//          [--format json|markdown] [--output PATH] [--threads N]
//
// Exit status: 0 when every requested check passes, 1 on any failed check,
// 2 on a usage error. VERIFY_THREADS overrides --threads.

#include "z3z3/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

enum class Format { json, markdown };

struct Config {
    std::string command;
    int case_id = 0;
    std::string lemma;
    int samples = 8;
    std::uint64_t seed = 0;
    int conductor = 36;
    Format format = Format::json;
    std::string output;
    int threads = 1;
};

struct Outcome {
    std::string text;
    bool pass = false;
};

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

template <class F>
Outcome run(const Config& cfg) {
    using namespace z3z3;
    const bool md = cfg.format == Format::markdown;
    if (cfg.command == "case") {
        const Report r = run_case<F>(cfg.case_id, cfg.samples, cfg.seed);
        return {md ? to_markdown(r) : dump(r), r.passed()};
    }
    if (cfg.command == "lemma") {
        const Report r = run_lemma<F>(cfg.lemma, cfg.samples, cfg.seed);
        return {md ? to_markdown(r) : dump(r), r.passed()};
    }
    if (cfg.command == "all") {
        const RunAll r = run_all<F>(cfg.samples, cfg.seed, cfg.threads);
        return {md ? to_markdown(r) : dump(to_json(r)), r.summary.passed()};
    }
    if (cfg.command == "dims") {
        const auto rows = dims_table<F>();
        bool ok = true;
        for (const auto& d : rows) ok = ok && d.pass();
        return {md ? to_markdown(rows) : dump(to_json(rows)), ok};
    }
    const Report r = selftest<F>();
    return {md ? to_markdown(r) : dump(r), r.passed()};
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Exact verification of the Z3 x Z3-symmetric spaces of G2, F4 and E6"};
    app.require_subcommand(1, 1);
    app.fallthrough();  // subcommands inherit this, so global flags may follow them
    app.add_option("--samples", cfg.samples, "sampled parameters per well-definedness or homomorphism check")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "sampler seed");
    app.add_option("--conductor", cfg.conductor, "cyclotomic conductor of the scalar field")
        ->check(CLI::IsMember({36, 180}));
    const std::map<std::string, Format> formats{{"json", Format::json}, {"markdown", Format::markdown}};
    app.add_option("--format", cfg.format, "report format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--output", cfg.output, "write the report here instead of stdout");
    app.add_option("--threads", cfg.threads, "worker threads for 'all'")->check(CLI::PositiveNumber);

    auto* c = app.add_subcommand("case", "run the checklist of one case");
    c->add_option("id", cfg.case_id, "case number")->required()->check(CLI::Range(1, 14));
    auto* l = app.add_subcommand("lemma", "run one supporting suite");
    std::vector<std::string> ids;
    for (const auto& s : z3z3::lemma_suites()) ids.push_back(s.id);
    l->add_option("id", cfg.lemma, "suite id")->required()->check(CLI::IsMember(ids));
    app.add_subcommand("all", "run every case and suite");
    app.add_subcommand("dims", "algebra, single and joint fixed dimensions against expectations");
    app.add_subcommand("selftest", "fast internal consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    Outcome out;
    try {
        out = cfg.conductor == 180 ? run<z3z3::Cyc180>(cfg) : run<z3z3::CycScalar>(cfg);
    } catch (const std::exception& e) {
        std::cerr << "verify: internal error: " << e.what() << "\n";
        return 1;
    }
    if (cfg.output.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!(f << out.text)) {
            std::cerr << "verify: cannot write " << cfg.output << "\n";
            return 2;
        }
    }
    return out.pass ? 0 : 1;
}
