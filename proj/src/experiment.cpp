#include "addrep/experiment.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "addrep/constructions.hpp"
#include "addrep/errors.hpp"
#include "addrep/sequence_io.hpp"

namespace addrep {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

bool wants(const ExperimentConfig& cfg, const std::string& check) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), "all") != cfg.checks.end() ||
           std::find(cfg.checks.begin(), cfg.checks.end(), check) != cfg.checks.end();
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Grids derived from n when the config leaves them empty.
struct Grids {
    std::vector<std::uint64_t> lemma5;
    std::vector<std::uint64_t> calibration;
    std::vector<double> y;
    std::vector<double> ineq33;
    std::vector<double> x;
    std::uint64_t degree = 0;
};

Grids resolve_grids(const ExperimentConfig& cfg) {
    Grids g;
    g.lemma5 = cfg.n_grid;
    if (g.lemma5.empty()) {
        for (std::uint64_t v : {40, 100, 400, 2000, 10000}) {
            if (v <= cfg.n) g.lemma5.push_back(v);
        }
        if (cfg.n >= 40 && (g.lemma5.empty() || g.lemma5.back() != cfg.n)) g.lemma5.push_back(cfg.n);
    }
    g.calibration = cfg.calibration_grid;
    if (g.calibration.empty()) {
        for (std::uint64_t v = 1024; v <= cfg.n; v *= 2) g.calibration.push_back(v);
        if (g.calibration.empty()) g.calibration.push_back(cfg.n);
    }
    g.y = cfg.y_grid;
    if (g.y.empty()) {
        for (std::uint64_t v = 64; v <= std::max<std::uint64_t>(64, cfg.n / 16); v *= 2) g.y.push_back(static_cast<double>(v));
    }
    g.ineq33 = cfg.ineq33_grid;
    if (g.ineq33.empty()) {
        for (int v = 20; v <= 200; v += 20) g.ineq33.push_back(v);
    }
    g.x = cfg.x_grid;
    if (g.x.empty()) {
        for (int i = 1; i <= 99; ++i) g.x.push_back(i / 100.0);
    }
    g.degree = cfg.degree.value_or(std::min<std::uint64_t>(cfg.n, 4096));
    return g;
}

template <typename T>
T max_of(const std::vector<T>& v) {
    return v.empty() ? T{} : *std::max_element(v.begin(), v.end());
}

std::uint64_t k_needed(const ExperimentConfig& cfg, const Grids& g) {
    std::uint64_t n_max = 0;
    double y_max = 0.0;
    if (wants(cfg, "hypothesis") || wants(cfg, "theorem1") || wants(cfg, "corollaries")) n_max = cfg.n;
    if (wants(cfg, "theorem1") && cfg.calibrate) n_max = std::max(n_max, max_of(g.calibration));
    if (wants(cfg, "lemma5")) {
        n_max = std::max(n_max, max_of(g.lemma5));
        y_max = std::max(y_max, static_cast<double>(max_of(g.lemma5)));
    }
    if (wants(cfg, "lemma6")) y_max = std::max(y_max, max_of(g.y));
    if (wants(cfg, "ineq33")) y_max = std::max(y_max, max_of(g.ineq33));
    return required_k(n_max, y_max, cfg.tol);
}

double y_max_for_psi(const ExperimentConfig& cfg, const Grids& g) {
    double y = 0.0;
    if (wants(cfg, "lemma5")) y = std::max(y, static_cast<double>(max_of(g.lemma5)) / 2.0);
    if (wants(cfg, "lemma6")) y = std::max(y, max_of(g.y));
    if (wants(cfg, "ineq33")) y = std::max(y, max_of(g.ineq33));
    return y;
}

using Task = std::function<std::vector<VerificationReport>()>;

std::vector<std::vector<VerificationReport>> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<std::vector<VerificationReport>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

std::string sweep_csv(const char* header, const std::vector<std::array<double, 3>>& rows) {
    std::string out = std::string(header) + "\n";
    for (const auto& r : rows) out += format_double(r[0]) + "," + format_double(r[1]) + "," + format_double(r[2]) + "\n";
    return out;
}

}  // namespace

const std::vector<std::string>& builtin_families() {
    static const std::vector<std::string> names = {"full", "complement-of-powers", "complement-of-greedy-sidon"};
    return names;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {"corollaries", "hypothesis", "identity28", "ineq33",
                                                   "lemma1",      "lemma5",     "lemma6",     "theorem1"};
    return names;
}

IntegerSequence greedy_sidon_up_to(std::uint64_t cap) {
    std::vector<std::uint64_t> terms;
    BitVector sums(2 * cap + 1);
    for (std::uint64_t cand = 1; cand <= cap; ++cand) {
        bool ok = !sums.test(2 * cand);
        for (std::size_t i = 0; ok && i < terms.size(); ++i) ok = !sums.test(cand + terms[i]);
        if (!ok) continue;
        for (auto t : terms) sums.set(cand + t);
        sums.set(2 * cand);
        terms.push_back(cand);
    }
    return IntegerSequence(std::move(terms), cap);
}

IntegerSequence make_family(const std::string& family, std::uint64_t bound) {
    if (family == "full") return IntegerSequence::interval(1, bound);
    if (family == "complement-of-powers") return complement(powers_of_two(std::max<std::uint64_t>(bound, 2)), bound);
    if (family == "complement-of-greedy-sidon") return complement(greedy_sidon_up_to(bound), bound);
    throw ConfigError("unknown family '" + family + "' (known: " + join(builtin_families()) + ", file)");
}

std::vector<double> parse_grid(const std::string& spec) {
    auto to_d = [&spec](const std::string& s) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw ConfigError("bad grid value '" + s + "' in '" + spec + "'");
            return v;
        } catch (const std::logic_error&) {
            throw ConfigError("bad grid value '" + s + "' in '" + spec + "'");
        }
    };
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw ConfigError("grid range must be start:step:stop, got '" + spec + "'");
        const double start = to_d(parts[0]), step = to_d(parts[1]), stop = to_d(parts[2]);
        if (!(step > 0.0) || stop < start) throw ConfigError("empty or unbounded grid '" + spec + "'");
        for (std::uint64_t i = 0;; ++i) {
            const double v = start + static_cast<double>(i) * step;
            if (v > stop + 1e-9 * std::abs(stop)) break;
            out.push_back(v);
        }
        return out;
    }
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) {
        if (!p.empty()) out.push_back(to_d(p));
    }
    if (out.empty()) throw ConfigError("empty grid '" + spec + "'");
    return out;
}

ExperimentConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
    ExperimentConfig cfg;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& key = it.key();
            const auto& v = it.value();
            if (key == "family") {
                cfg.family = v.get<std::string>();
            } else if (key == "path") {
                cfg.path = v.get<std::string>();
            } else if (key == "N") {
                cfg.n = v.get<std::uint64_t>();
            } else if (key == "checks") {
                cfg.checks = v.is_string() ? std::vector<std::string>{v.get<std::string>()}
                                           : v.get<std::vector<std::string>>();
            } else if (key == "c1") {
                cfg.c1 = v.get<double>();
            } else if (key == "calibrate") {
                cfg.calibrate = v.get<bool>();
            } else if (key == "eps") {
                cfg.eps = v.get<double>();
            } else if (key == "tol") {
                cfg.tol = v.get<double>();
            } else if (key == "t_range") {
                const auto s = v.get<std::string>();
                if (s != "v1" && s != "v2") throw ConfigError("t_range must be v1 or v2");
                cfg.t_range = s == "v1" ? TRange::up_to_n : TRange::up_to_m;
            } else if (key == "n_grid") {
                cfg.n_grid = v.get<std::vector<std::uint64_t>>();
            } else if (key == "calibration_grid") {
                cfg.calibration_grid = v.get<std::vector<std::uint64_t>>();
            } else if (key == "y_grid") {
                cfg.y_grid = v.get<std::vector<double>>();
            } else if (key == "ineq33_grid") {
                cfg.ineq33_grid = v.get<std::vector<double>>();
            } else if (key == "x_grid") {
                cfg.x_grid = v.get<std::vector<double>>();
            } else if (key == "degree") {
                cfg.degree = v.get<std::uint64_t>();
            } else if (key == "threads") {
                cfg.threads = v.get<unsigned>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    if (cfg.family == "file") {
        if (cfg.path.empty()) throw ConfigError("family 'file' needs a path");
    } else if (std::find(builtin_families().begin(), builtin_families().end(), cfg.family) ==
               builtin_families().end()) {
        throw ConfigError("unknown family '" + cfg.family + "' (known: " + join(builtin_families()) + ", file)");
    }
    for (const auto& c : cfg.checks) {
        if (c != "all" && std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
            throw ConfigError("unknown check '" + c + "' (known: all, " + join(known_checks()) + ")");
        }
    }
    if (cfg.n < 3) throw ConfigError("N must be at least 3");
    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["family"] = cfg.family;
    if (cfg.family == "file") j["path"] = cfg.path;
    j["N"] = cfg.n;
    j["checks"] = cfg.checks;
    j["c1"] = cfg.c1;
    j["calibrate"] = cfg.calibrate;
    j["eps"] = cfg.eps;
    j["tol"] = cfg.tol;
    j["t_range"] = cfg.t_range == TRange::up_to_m ? "v2" : "v1";
    const auto g = resolve_grids(cfg);
    j["n_grid"] = g.lemma5;
    j["calibration_grid"] = g.calibration;
    j["y_grid"] = g.y;
    j["ineq33_grid"] = g.ineq33;
    j["x_grid"] = g.x;
    j["degree"] = g.degree;
    return j;
}

ExperimentBundle run_experiment(const ExperimentConfig& cfg) {
    const auto grids = resolve_grids(cfg);
    const auto k = k_needed(cfg, grids);
    std::uint64_t bound = 2 * k + 1;
    if (wants(cfg, "identity28")) bound = std::max(bound, grids.degree);
    if (const double y = y_max_for_psi(cfg, grids); y > 0.0) bound = std::max(bound, psi_cutoff(y, cfg.tol));

    IntegerSequence a = cfg.family == "file" ? read_sequence(cfg.path) : make_family(cfg.family, bound);
    const auto ctx = SequenceContext::prepare(std::move(a), k);

    std::vector<std::pair<std::string, Task>> tasks;
    nlohmann::json calibration = nlohmann::json::object();

    if (wants(cfg, "hypothesis")) {
        tasks.emplace_back("hypothesis", [&] { return std::vector{hypothesis_check(ctx, cfg.n, cfg.t_range)}; });
    }
    if (wants(cfg, "theorem1")) {
        if (cfg.calibrate) {
            const auto cals = calibrate_c1(ctx, grids.calibration);
            for (const auto& c : cals) {
                calibration["c1"][c.variant] = c.value;
                calibration["c1_onset"][c.variant] = c.onset ? nlohmann::json(*c.onset) : nlohmann::json(nullptr);
            }
            calibration["c1_grid"] = grids.calibration;
            tasks.emplace_back("theorem1", [&ctx, &grids, cals] {
                std::vector<VerificationReport> out;
                for (const auto& cal : cals) {
                    for (auto n : grids.calibration) {
                        for (auto& r : theorem1_report(ctx, n, cal.value)) {
                            if (r.variant == cal.variant) out.push_back(std::move(r));
                        }
                    }
                    VerificationReport c;
                    c.check_id = "theorem1-calibration";
                    c.variant = cal.variant;
                    c.params = {{"grid", cal.grid}};
                    c.params["onset"] = cal.onset ? nlohmann::json(*cal.onset) : nlohmann::json(nullptr);
                    c.lhs = cal.value;
                    c.slack = cal.value;
                    c.status = Status::informational;
                    out.push_back(std::move(c));
                }
                return out;
            });
        } else {
            tasks.emplace_back("theorem1", [&] { return theorem1_report(ctx, cfg.n, cfg.c1); });
        }
    }
    if (wants(cfg, "corollaries")) {
        tasks.emplace_back("corollaries", [&] { return corollary_reports(ctx, cfg.n, cfg.eps); });
    }
    if (wants(cfg, "lemma5") && !grids.lemma5.empty()) {
        tasks.emplace_back("lemma5", [&] { return lemma5_report(ctx, grids.lemma5, cfg.tol); });
    }
    if (wants(cfg, "lemma6")) {
        tasks.emplace_back("lemma6", [&] { return lemma6_theorem2_report(ctx, grids.y, cfg.tol); });
    }
    if (wants(cfg, "identity28")) {
        tasks.emplace_back("identity28", [&] {
            if (ctx.a.contains_zero()) {
                VerificationReport r;
                r.check_id = "identity28";
                r.variant = "exact";
                r.params = {{"reason", "sequence contains 0"}};
                r.status = Status::not_applicable;
                return std::vector{r};
            }
            return identity28_reports(ctx.a, grids.degree);
        });
    }
    if (wants(cfg, "ineq33")) {
        tasks.emplace_back("ineq33", [&] { return ineq33_reports(ctx, grids.ineq33, cfg.tol); });
    }
    if (wants(cfg, "lemma1")) {
        tasks.emplace_back("lemma1", [&] { return dyadic_reports(grids.x); });
    }

    std::stable_sort(tasks.begin(), tasks.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Task> bodies;
    for (auto& t : tasks) bodies.push_back(t.second);
    const auto results = run_tasks(bodies, cfg.threads);

    ExperimentBundle bundle;
    for (const auto& group : results) bundle.reports.insert(bundle.reports.end(), group.begin(), group.end());

    std::map<std::string, int> summary = {{"pass", 0}, {"fail", 0}, {"informational", 0}, {"not-applicable", 0}};
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : bundle.reports) {
        ++summary[to_string(r.status)];
        reports.push_back(to_json(r));
    }

    char digest_hex[17];
    std::snprintf(digest_hex, sizeof digest_hex, "%016llx", static_cast<unsigned long long>(digest(ctx.a)));
    bundle.json["tool"] = "addrep";
    bundle.json["version"] = kToolVersion;
    bundle.json["config"] = config_to_json(cfg);
    bundle.json["sequence"] = {{"family", cfg.family},
                               {"bound", ctx.a.bound()},
                               {"size", ctx.a.size()},
                               {"digest", digest_hex},
                               {"degenerate", ctx.degenerate}};
    bundle.json["summary"] = summary;
    bundle.json["calibration"] = calibration;
    bundle.json["reports"] = reports;

    {
        std::ostringstream csv;
        write_reports_csv(csv, bundle.reports);
        bundle.tables["reports.csv"] = csv.str();
    }
    if (wants(cfg, "lemma6")) {
        std::vector<std::array<double, 3>> psi_rows, g_rows;
        for (double y : grids.y) {
            const auto p = psi(ctx.a, y, cfg.tol);
            const auto g = g_of(ctx.sums, y, cfg.tol);
            psi_rows.push_back({y, p.value, p.err});
            g_rows.push_back({y, g.value, g.err});
        }
        bundle.tables["psi_sweep.csv"] = sweep_csv("Y,value,err", psi_rows);
        bundle.tables["g_sweep.csv"] = sweep_csv("Y,value,err", g_rows);
    }
    if (wants(cfg, "lemma1")) {
        std::vector<std::array<double, 3>> rows;
        for (double x : grids.x) rows.push_back({x, dyadic_sum(x), dyadic_bound(x)});
        bundle.tables["dyadic_sweep.csv"] = sweep_csv("x,sum,bound", rows);
    }
    return bundle;
}

void write_bundle(const ExperimentBundle& bundle, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "report.json");
        if (!out) throw Error("cannot write " + (dir / "report.json").string());
        out << bundle.json.dump(2) << '\n';
    }
    for (const auto& [name, text] : bundle.tables) {
        std::ofstream out(dir / name);
        if (!out) throw Error("cannot write " + (dir / name).string());
        out << text;
    }
}

}  // namespace addrep
