// addrep: command-line front end for representation-function experiments.
//
//   addrep compute   --seq <file> --n <N> --out <csv> [--sums <csv>]
//   addrep verify    <identity28|ineq33|lemma1|lemma5|lemma6|theorem2> [--seq <file>]
//                    [--degree D | --grid spec] --json <file>
//   addrep construct sarkozy --b <pow2|greedy> --cap <C> --nmax <N> --outdir <dir>
//   addrep harness   <theorem1|corollaries|hypothesis> --family <name> --n <N>
//                    [--c1 x | --calibrate] --json <file>
//   addrep run       --config <json> --outdir <dir> [--threads k]
//
// Exit status: 0 all checks pass or are informational, 1 a check failed,
// 2 usage, parse or configuration error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "addrep/analytic.hpp"
#include "addrep/constructions.hpp"
#include "addrep/errors.hpp"
#include "addrep/experiment.hpp"
#include "addrep/harness.hpp"
#include "addrep/partial_sums.hpp"
#include "addrep/repfuncs.hpp"
#include "addrep/sequence_io.hpp"

namespace {

using namespace addrep;

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

nlohmann::json wrap_reports(const std::string& command, const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return {{"tool", "addrep"}, {"version", kToolVersion}, {"command", command}, {"reports", arr}};
}

void print_summary(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        std::fprintf(stderr, "%-22s %-10s slack=% .6e err=%.2e  %s\n", r.check_id.c_str(), r.variant.c_str(), r.slack,
                     r.err, to_string(r.status).c_str());
    }
}

std::vector<std::uint64_t> to_integers(const std::vector<double>& grid) {
    std::vector<std::uint64_t> out;
    for (double v : grid) {
        if (v < 0 || std::floor(v) != v) throw ConfigError("grid values must be non-negative integers here");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

int cmd_compute(const std::string& seq, std::uint64_t n, const std::string& out_csv, const std::string& sums_csv) {
    const auto a = read_sequence(seq);
    const auto p = rep_profiles(a, n);
    std::ofstream out(out_csv);
    if (!out) throw Error("cannot write " + out_csv);
    write_profile_csv(out, p);
    if (!sums_csv.empty()) {
        if (n < 3) throw DomainError("S_k needs a profile reaching at least R2(3)");
        std::ofstream s(sums_csv);
        if (!s) throw Error("cannot write " + sums_csv);
        write_sums_csv(s, s_profile(p, (n - 1) / 2));
    }
    return 0;
}

int cmd_verify(const std::string& check, const std::string& seq, std::optional<std::uint64_t> degree,
               const std::string& grid_spec, double tol, const std::string& json_path) {
    std::vector<VerificationReport> reports;
    if (check == "lemma1") {
        reports = dyadic_reports(parse_grid(grid_spec.empty() ? "0.01:0.01:0.99" : grid_spec));
    } else {
        if (seq.empty()) throw ConfigError("verify " + check + " needs --seq");
        auto a = read_sequence(seq);
        if (check == "identity28") {
            reports = identity28_reports(a, degree.value_or(std::min<std::uint64_t>(a.bound(), 4096)));
        } else if (check == "ineq33") {
            const auto grid = parse_grid(grid_spec.empty() ? "20:20:200" : grid_spec);
            auto ctx = SequenceContext::prepare(std::move(a), required_k(0, *std::max_element(grid.begin(), grid.end()), tol));
            reports = ineq33_reports(ctx, grid, tol);
        } else if (check == "lemma5") {
            const auto grid = to_integers(parse_grid(grid_spec.empty() ? "40,100,400,2000" : grid_spec));
            const auto top = *std::max_element(grid.begin(), grid.end());
            auto ctx = SequenceContext::prepare(std::move(a), required_k(top, static_cast<double>(top), tol));
            reports = lemma5_report(ctx, grid, tol);
        } else if (check == "lemma6" || check == "theorem2") {
            const auto grid = parse_grid(grid_spec.empty() ? "64,128,256,512,1024" : grid_spec);
            auto ctx = SequenceContext::prepare(std::move(a), required_k(0, *std::max_element(grid.begin(), grid.end()), tol));
            for (auto& r : lemma6_theorem2_report(ctx, grid, tol)) {
                const bool is_lemma6 = r.check_id == "lemma6";
                if (is_lemma6 == (check == "lemma6")) reports.push_back(std::move(r));
            }
        } else {
            throw ConfigError("unknown verify check '" + check + "'");
        }
    }
    print_summary(reports);
    write_json(json_path, wrap_reports("verify " + check, reports));
    return exit_code(reports);
}

int cmd_construct(const std::string& kind, const std::string& b_name, std::uint64_t cap, std::uint64_t n_max,
                  const std::string& outdir) {
    if (kind != "sarkozy") throw ConfigError("unknown construction '" + kind + "'");
    if (n_max < 2) throw ConfigError("--nmax must be at least 2");
    IntegerSequence b(cap);
    if (b_name == "pow2") {
        b = powers_of_two(cap);
    } else if (b_name == "greedy") {
        b = double_sequence(greedy_sidon_up_to(cap / 2)).truncate(cap);
    } else {
        throw ConfigError("unknown --b '" + b_name + "' (pow2 or greedy)");
    }
    const auto inst = build_instance(b, n_max);
    const auto violations = monotonicity_violations(inst, n_max - 1);
    const auto density = density_in(inst.x, n_max);

    std::filesystem::create_directories(outdir);
    const std::filesystem::path dir(outdir);
    write_sequence_file(dir / "B.txt", inst.b);
    write_sequence_file(dir / "A.txt", inst.a);
    write_sequence_file(dir / "Y.txt", inst.y);
    write_sequence_file(dir / "X.txt", inst.x);

    nlohmann::json summary = {
        {"tool", "addrep"},
        {"version", kToolVersion},
        {"construction", "sarkozy"},
        {"b", b_name},
        {"cap", cap},
        {"n_max", n_max},
        {"sizes", {{"B", inst.b.size()}, {"A", inst.a.size()}, {"Y", inst.y.size()}, {"X", inst.x.size()}}},
        {"density", {{"hits", density.hits}, {"range", density.range}, {"ratio", density.ratio},
                     {"lower_bound", density_lower_bound(inst.b, n_max)}}},
        {"violations", violations},
        {"status", violations.empty() ? "pass" : "fail"},
    };
    write_json((dir / "summary.json").string(), summary);
    std::fprintf(stderr, "|B|=%zu |Y|=%zu density(X)=%.6f violations=%zu\n", inst.b.size(), inst.y.size(),
                 density.ratio, violations.size());
    return violations.empty() ? 0 : 1;
}

int cmd_harness(const std::string& which, const std::string& family, const std::string& seq, std::uint64_t n,
                std::optional<double> c1, bool calibrate, double eps, const std::string& variant,
                const std::string& json_path) {
    if (which != "theorem1" && which != "corollaries" && which != "hypothesis") {
        throw ConfigError("unknown harness report '" + which + "'");
    }
    if (c1 && calibrate) throw ConfigError("--c1 and --calibrate are exclusive");
    ExperimentConfig cfg;
    cfg.family = family;
    cfg.path = seq;
    cfg.n = n;
    cfg.checks = {which};
    cfg.c1 = c1.value_or(0.0);
    cfg.calibrate = calibrate;
    cfg.eps = eps;
    if (variant != "v1" && variant != "v2") throw ConfigError("--variant must be v1 or v2");
    cfg.t_range = variant == "v1" ? TRange::up_to_n : TRange::up_to_m;
    auto j = config_to_json(cfg);
    cfg = parse_config(j);  // validates family / check names
    const auto bundle = run_experiment(cfg);
    print_summary(bundle.reports);
    auto out = wrap_reports("harness " + which, bundle.reports);
    out["config"] = bundle.json["config"];
    out["sequence"] = bundle.json["sequence"];
    out["calibration"] = bundle.json["calibration"];
    write_json(json_path, out);
    return exit_code(bundle.reports);
}

int cmd_run(const std::string& config_path, const std::string& outdir, std::optional<unsigned> threads) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config " + config_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(config_path + ": " + e.what());
    }
    auto cfg = parse_config(j);
    if (threads) cfg.threads = *threads;
    const auto bundle = run_experiment(cfg);
    write_bundle(bundle, outdir);
    print_summary(bundle.reports);
    return exit_code(bundle.reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"addrep: representation functions, partial sums and inequality checks"};
    app.require_subcommand(1);

    std::string seq, out_csv, sums_csv, json_path, grid, family = "full", b_name = "pow2", outdir, config,
                                                                     variant = "v2";
    std::uint64_t n = 0, cap = 0, n_max = 0;
    std::optional<std::uint64_t> degree;
    std::optional<double> c1;
    std::optional<unsigned> threads;
    bool calibrate = false;
    double eps = 0.1, tol = kDefaultTolerance;
    std::string check, which, kind;

    auto* compute = app.add_subcommand("compute", "write R1/R2/R3 profiles as CSV");
    compute->add_option("--seq", seq, "sequence file")->required();
    compute->add_option("--n", n, "largest n")->required();
    compute->add_option("--out", out_csv, "CSV output (n,R1,R2,R3)")->required();
    compute->add_option("--sums", sums_csv, "optional CSV output (k,S,S_plus)");

    auto* verify = app.add_subcommand("verify", "check an identity or inequality on a sequence");
    verify->add_option("check", check, "identity28|ineq33|lemma1|lemma5|lemma6|theorem2")
        ->required()
        ->check(CLI::IsMember({"identity28", "ineq33", "lemma1", "lemma5", "lemma6", "theorem2"}));
    verify->add_option("--seq", seq, "sequence file");
    verify->add_option("--degree", degree, "truncation degree (identity28)");
    verify->add_option("--grid", grid, "grid: a,b,c or start:step:stop");
    verify->add_option("--tol", tol, "truncation tolerance");
    verify->add_option("--json", json_path, "JSON report output")->required();

    auto* construct = app.add_subcommand("construct", "build the density-one monotonicity construction");
    construct->add_option("kind", kind, "construction name (sarkozy)")->required();
    construct->add_option("--b", b_name, "Sidon set: pow2 or greedy");
    construct->add_option("--cap", cap, "largest element of B")->required();
    construct->add_option("--nmax", n_max, "truncation of A, Y, X")->required();
    construct->add_option("--outdir", outdir, "output directory")->required();

    auto* harness = app.add_subcommand("harness", "finite-N reports for the main inequalities");
    harness->add_option("report", which, "theorem1|corollaries|hypothesis")
        ->required()
        ->check(CLI::IsMember({"theorem1", "corollaries", "hypothesis"}));
    harness->add_option("--family", family, "full|complement-of-powers|complement-of-greedy-sidon|file");
    harness->add_option("--seq", seq, "sequence file for --family file");
    harness->add_option("--n", n, "scale N")->required();
    auto* c1_opt = harness->add_option("--c1", c1, "constant c1");
    harness->add_flag("--calibrate", calibrate, "report the smallest c1 over N = 2^10 .. N")->excludes(c1_opt);
    harness->add_option("--eps", eps, "epsilon for corollary 1");
    harness->add_option("--variant", variant, "T(N) range: v2 (n <= m(N)) or v1 (n <= N)");
    harness->add_option("--json", json_path, "JSON report output")->required();

    auto* run = app.add_subcommand("run", "run an experiment described by a JSON config");
    run->add_option("--config", config, "config file")->required();
    run->add_option("--outdir", outdir, "output directory")->required();
    run->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(seq, n, out_csv, sums_csv);
        if (verify->parsed()) return cmd_verify(check, seq, degree, grid, tol, json_path);
        if (construct->parsed()) return cmd_construct(kind, b_name, cap, n_max, outdir);
        if (harness->parsed()) {
            if (family == "file" && seq.empty()) throw ConfigError("--family file needs --seq");
            return cmd_harness(which, family, seq, n, c1, calibrate, eps, variant, json_path);
        }
        if (run->parsed()) return cmd_run(config, outdir, threads);
    } catch (const addrep::Error& e) {
        std::fprintf(stderr, "addrep: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "addrep: %s\n", e.what());
        return 2;
    }
    return 2;
}
