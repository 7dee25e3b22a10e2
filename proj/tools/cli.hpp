#pragma once

// Command-line front end. Exit codes: 0 success / affirmative verdict, 1 negative
// verdict, 2 usage or validation error, 3 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringdna/ringdna.hpp"

namespace ringdna::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCap = 3;

struct Config {
    int n = 0;
    std::string f1, f2, f14 = "0", f3, f4;
    std::string format = "ring";
    std::string property;
    std::string metric = "hamming";
    std::size_t cap = kDefaultCap;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    int max_f14_degree = -1;
    std::string out;
    std::string codebook;
    int distance = 1;
};

namespace detail {

inline GeneratorSet generators_from(const Config& cfg) {
    if (cfg.f1.empty() || cfg.f2.empty()) throw InvalidGenerators("--f1 and --f2 are required");
    if (cfg.f3.empty() != cfg.f4.empty()) throw InvalidGenerators("--f3 and --f4 must be given together");
    GeneratorSet g;
    g.n = cfg.n;
    g.f1 = parse_poly(cfg.f1);
    g.f2 = parse_poly(cfg.f2);
    g.f14 = parse_poly(cfg.f14);
    if (!cfg.f3.empty()) {
        g.f3 = parse_poly(cfg.f3);
        g.f4 = parse_poly(cfg.f4);
    }
    require_valid(g);
    return g;
}

inline int cmd_factor(const Config& cfg, std::ostream& out) {
    const auto f2 = factor_xn_minus_1_f2(cfg.n);
    const auto z4 = factor_xn_minus_1_z4(cfg.n);
    out << "F2";
    for (const auto& f : f2) out << ' ' << to_string(f);
    out << "\nZ4";
    for (const auto& f : z4) out << ' ' << to_string(f);
    out << '\n';
    return kOk;
}

inline int cmd_enumerate(const Config& cfg, std::ostream& out) {
    const ExportFormat fmt = parse_export_format(cfg.format);
    const Code code = enumerate(generators_from(cfg), cfg.cap);
    write_code_export(out, code, fmt);
    return kOk;
}

inline int verdict(std::ostream& out, bool ok) {
    out << "result=" << (ok ? "true" : "false") << '\n';
    return ok ? kOk : kNegative;
}

inline int cmd_check(const Config& cfg, std::ostream& out) {
    const GeneratorSet g = generators_from(cfg);
    const std::string& p = cfg.property;
    if (p == "thm31" || p == "thm32" || p == "thm41" || p == "thm42") {
        const Theorem t = p == "thm31" ? Theorem::T31 : p == "thm32" ? Theorem::T32 : p == "thm41" ? Theorem::T41 : Theorem::T42;
        const ConditionReport r = check(g, t, nullptr, cfg.cap);
        out << r << '\n';
        return verdict(out, r.satisfied);
    }
    const Code code = enumerate(g, cfg.cap);
    out << "size=" << code.size() << '\n';
    if (p == "reversible") return verdict(out, is_reversible(code));
    if (p == "rc") return verdict(out, is_rc_closed(code));
    if (p == "complement") return verdict(out, is_complement_closed(code));
    if (p == "dna") return verdict(out, is_dna_code(code));
    throw ParseError("unknown property '" + p + "'");
}

inline int cmd_distance(const Config& cfg, std::ostream& out) {
    const Code code = enumerate(generators_from(cfg), cfg.cap);
    if (cfg.metric == "hamming") out << min_hamming_distance(code) << '\n';
    else if (cfg.metric == "lee") out << min_lee_distance(code) << '\n';
    else if (cfg.metric == "dna") out << min_dna_distance(code) << '\n';
    else throw ParseError("unknown metric '" + cfg.metric + "'");
    return kOk;
}

inline int cmd_crossval(const Config& cfg, std::ostream& out) {
    SweepOptions opt;
    opt.n = cfg.n;
    opt.max_f14_degree = cfg.max_f14_degree;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    opt.cap = cfg.cap;
    require_supported_length(opt.n);
    if (const auto count = exhaustive_instance_count(opt); opt.samples == 0 && count > 2'000'000)
        throw Error("exhaustive sweep would visit " + std::to_string(count) + " instances; pass --samples");
    const SweepResult res = sweep(opt);
    write_sweep_report(out, res);
    return res.errata.empty() ? kOk : kNegative;
}

inline int cmd_constraints(const Config& cfg, std::ostream& out) {
    std::ifstream in(cfg.codebook);
    if (!in) throw ParseError("cannot open codebook '" + cfg.codebook + "'");
    const auto book = read_codebook(in);
    const bool h = check_hamming_constraint(book, cfg.distance);
    const bool r = check_reverse_constraint(book, cfg.distance);
    const bool rc = check_rc_constraint(book, cfg.distance);
    const bool gc = check_gc_constraint(book);
    out << "words=" << book.size() << " d=" << cfg.distance << '\n'
        << "hamming=" << (h ? "true" : "false") << '\n'
        << "reverse=" << (r ? "true" : "false") << '\n'
        << "reverse_complement=" << (rc ? "true" : "false") << '\n'
        << "gc_content=" << (gc ? "true" : "false") << '\n'
        << "# reverse constraints: ordered pairs, codon-level reversal, pairs with x^r = y skipped\n";
    return verdict(out, h && r && rc && gc);
}

}  // namespace detail

/// Runs one CLI invocation; all output goes to `out` / `err` (or to --out when given).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic DNA codes over Z4 + uZ4"};
    app.require_subcommand(1);
    Config cfg;

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "code length (odd, <= 63)")->required(); };
    auto add_gens = [&](CLI::App* sub) {
        add_n(sub);
        sub->add_option("--f1", cfg.f1, "f1 coefficients, ascending, comma-separated")->required();
        sub->add_option("--f2", cfg.f2, "f2 coefficients")->required();
        sub->add_option("--f14", cfg.f14, "f14 coefficients (default 0)");
        sub->add_option("--f3", cfg.f3, "f3 coefficients (two-generator form)");
        sub->add_option("--f4", cfg.f4, "f4 coefficients (two-generator form)");
        sub->add_option("--cap", cfg.cap, "enumeration cap (codewords)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };

    auto* factor = app.add_subcommand("factor", "factor x^n-1 over F2 and Z4");
    add_n(factor);
    factor->add_option("--out", cfg.out, "output path (default stdout)");

    auto* build = app.add_subcommand("build", "enumerate a code and write its export file");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "same as build");
    for (auto* sub : {build, enumerate_cmd}) {
        add_gens(sub);
        sub->add_option("--format", cfg.format, "ring | dna | gray")->check(CLI::IsMember({"ring", "dna", "gray"}));
    }

    auto* check = app.add_subcommand("check", "check a closure property or theorem condition");
    add_gens(check);
    check->add_option("--property", cfg.property, "reversible | rc | complement | dna | thm31 | thm32 | thm41 | thm42")
        ->required()
        ->check(CLI::IsMember({"reversible", "rc", "complement", "dna", "thm31", "thm32", "thm41", "thm42"}));

    auto* distance = app.add_subcommand("distance", "minimum distance of a code");
    add_gens(distance);
    distance->add_option("--metric", cfg.metric, "hamming | lee | dna")->check(CLI::IsMember({"hamming", "lee", "dna"}));

    auto* crossval = app.add_subcommand("crossval", "cross-validate theorem conditions against brute force");
    add_n(crossval);
    crossval->add_option("--samples", cfg.samples, "random instances (0 = exhaustive)");
    crossval->add_option("--seed", cfg.seed, "random seed");
    crossval->add_option("--max-f14-degree", cfg.max_f14_degree, "bound on deg f14 (default n-1)");
    crossval->add_option("--cap", cfg.cap, "enumeration cap (codewords)");
    crossval->add_option("--out", cfg.out, "output path (default stdout)");

    auto* constraints = app.add_subcommand("constraints", "check DNA design constraints on a codebook file");
    constraints->add_option("--codebook", cfg.codebook, "codebook file (one word per line)")->required();
    constraints->add_option("--d", cfg.distance, "minimum distance d");
    constraints->add_option("--out", cfg.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            err << "cannot open output '" << cfg.out << "'\n";
            return kUsage;
        }
    }
    std::ostream& sink = cfg.out.empty() ? out : file;

    try {
        if (*factor) return detail::cmd_factor(cfg, sink);
        if (*build || *enumerate_cmd) return detail::cmd_enumerate(cfg, sink);
        if (*check) return detail::cmd_check(cfg, sink);
        if (*distance) return detail::cmd_distance(cfg, sink);
        if (*crossval) return detail::cmd_crossval(cfg, sink);
        if (*constraints) return detail::cmd_constraints(cfg, sink);
    } catch (const CapExceeded& e) {
        err << e.what() << '\n';
        return kCap;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ringdna::cli
