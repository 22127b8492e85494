#include "addrep/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

constexpr double kE = std::numbers::e;

// Allowance for double rounding in reports whose sides are plain floating
// expressions with no truncation error.
double rounding_err(double lhs, double rhs) {
    return 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(lhs) + std::abs(rhs) + 1.0);
}

std::string hex_digest(const IntegerSequence& a) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest(a)));
    return buf;
}

nlohmann::json base_params(const SequenceContext& ctx) {
    nlohmann::json p;
    p["digest"] = hex_digest(ctx.a);
    p["bound"] = ctx.a.bound();
    if (ctx.degenerate) p["degenerate"] = true;
    return p;
}

nlohmann::json scale_params(const SequenceContext& ctx, std::uint64_t n) {
    auto p = base_params(ctx);
    p["N"] = n;
    return p;
}

nlohmann::json y_params(const SequenceContext& ctx, double y) {
    auto p = base_params(ctx);
    p["Y"] = y;
    return p;
}

VerificationReport not_applicable(VerificationReport r, const std::string& why) {
    r.status = Status::not_applicable;
    r.params["reason"] = why;
    return r;
}

// Right-hand side of the l1 inequality without c1.
double theorem1_rhs0(const SequenceContext& ctx, std::uint64_t n, const std::string& variant) {
    const double missing = static_cast<double>(n - counting_function(ctx.a, n));
    const double ln_n = std::log(static_cast<double>(n));
    double log_term = 0.0;
    if (variant == "v2") {
        log_term = ln_n / 4.0;
    } else if (variant == "v1") {
        log_term = ln_n / 7.0;
    } else {
        log_term = std::log2(static_cast<double>(n)) / 8.0;
    }
    return missing / (10.0 * kE) - log_term;
}

const std::vector<std::string> kTheorem1Variants = {"v2", "v1", "log2"};

}  // namespace

SequenceContext SequenceContext::prepare(IntegerSequence a, std::uint64_t k_max) {
    const std::uint64_t need = 2 * k_max + 1;
    if (a.bound() < need) {
        throw TruncationError("the requested checks need the sequence up to " + std::to_string(need) +
                              ", its bound is " + std::to_string(a.bound()));
    }
    SequenceContext ctx{std::move(a), {}, {}, false};
    ctx.profile = rep_profiles(ctx.a, need);
    ctx.sums = s_profile(ctx.profile, k_max);
    const auto els = ctx.a.elements();
    ctx.degenerate = els.empty() || 2 * els.back() <= ctx.a.bound();
    return ctx;
}

std::uint64_t required_k(std::uint64_t n_max, double y_max, double tol) {
    std::uint64_t k = 1;
    if (n_max >= 3) k = std::max(k, m_of(n_max));
    if (y_max > 0.0) k = std::max(k, g_cutoff(y_max, tol));
    return k;
}

VerificationReport hypothesis_check(const SequenceContext& ctx, std::uint64_t n, TRange range) {
    const double t = static_cast<double>(t_of(ctx.sums, n, range));
    const double quota = static_cast<double>(counting_function(ctx.a, n)) / 36.0;
    auto params = scale_params(ctx, n);
    params["T"] = t;
    params["A(N)"] = counting_function(ctx.a, n);
    // A violated hypothesis is not a failure of anything.
    auto r = inequality_report("hypothesis", range == TRange::up_to_m ? "v2" : "v1", std::move(params), quota, t, 0.0,
                               Claim::asymptotic, true);
    if (ctx.degenerate) r.status = Status::informational;
    return r;
}

std::vector<VerificationReport> theorem1_report(const SequenceContext& ctx, std::uint64_t n, double c1) {
    const double lhs = l1_sum(ctx.sums, n);
    const auto hyp = hypothesis_check(ctx, n);
    std::vector<VerificationReport> out;
    for (const auto& variant : kTheorem1Variants) {
        const double rhs = theorem1_rhs0(ctx, n, variant) - c1;
        auto params = scale_params(ctx, n);
        params["c1"] = c1;
        params["m(N)"] = m_of(n);
        params["hypothesis"] = to_string(hyp.status);
        out.push_back(inequality_report("theorem1", variant, std::move(params), lhs, rhs, rounding_err(lhs, rhs),
                                        Claim::asymptotic));
    }
    return out;
}

std::vector<Calibration> calibrate_c1(const SequenceContext& ctx, const std::vector<std::uint64_t>& n_grid) {
    std::vector<Calibration> out;
    for (const auto& variant : kTheorem1Variants) {
        Calibration cal{variant, 0.0, n_grid, std::nullopt};
        auto sorted = n_grid;
        std::sort(sorted.begin(), sorted.end());
        for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
            const double gap = theorem1_rhs0(ctx, *it, variant) - l1_sum(ctx.sums, *it);
            cal.value = std::max(cal.value, gap);
            if (cal.value <= 0.0) cal.onset = *it;
        }
        out.push_back(std::move(cal));
    }
    return out;
}

std::vector<VerificationReport> corollary_reports(const SequenceContext& ctx, std::uint64_t n, double eps) {
    if (!(eps > 0.0)) throw DomainError("corollary epsilon must be positive");
    const double missing = static_cast<double>(n - counting_function(ctx.a, n));
    const double ln_n = std::log(static_cast<double>(n));
    const double t = static_cast<double>(t_of(ctx.sums, n));
    const double tp = static_cast<double>(t_plus(ctx.sums, n));
    const auto hyp = hypothesis_check(ctx, n);
    const bool applicable = hyp.status == Status::pass;

    std::vector<VerificationReport> out;
    auto conditional = [&](VerificationReport r) {
        return applicable ? r : not_applicable(std::move(r), "T(N) < A(N)/36 fails at N");
    };

    {
        auto params = scale_params(ctx, n);
        params["eps"] = eps;
        const double rhs = missing / ((10.0 * kE + eps) * ln_n) - 0.25;
        out.push_back(conditional(inequality_report("corollary1", "v2", std::move(params), tp, rhs,
                                                    rounding_err(tp, rhs), Claim::asymptotic, true)));
    }
    {
        const double rhs = missing / (17.0 * kE * ln_n) - 1.0 / 7.0;
        out.push_back(conditional(inequality_report("corollary1", "v1", scale_params(ctx, n), tp, rhs,
                                                    rounding_err(tp, rhs), Claim::asymptotic, true)));
    }
    {
        const double quota = static_cast<double>(counting_function(ctx.a, n)) / 36.0;
        const double rhs = std::min(quota, missing / (11.0 * kE * ln_n));
        out.push_back(inequality_report("corollary2", "v1", scale_params(ctx, n), t, rhs, rounding_err(t, rhs),
                                        Claim::asymptotic));
    }
    for (std::uint64_t m = n; m >= 16; m /= 2) {
        VerificationReport r;
        r.check_id = "corollary3";
        r.variant = "trend";
        r.params = scale_params(ctx, m);
        r.lhs = static_cast<double>(t_of(ctx.sums, m));
        r.rhs = 0.0;
        r.slack = r.lhs;
        r.status = Status::informational;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> lemma5_report(const SequenceContext& ctx, const std::vector<std::uint64_t>& n_grid,
                                              double tol) {
    std::vector<VerificationReport> out;
    for (auto n : n_grid) {
        if (n < 40) throw DomainError("the g(N) bound is stated for N >= 40, got " + std::to_string(n));
        const double y = static_cast<double>(n);
        const auto g = g_of(ctx.sums, y, tol);
        const double t = static_cast<double>(t_of(ctx.sums, n));

        auto params = scale_params(ctx, n);
        params["T"] = t;
        params["g_cutoff"] = g.params.cutoff;
        out.push_back(inequality_report("lemma5a", "v2", params, 4.0 * t + 40.0, g.value, g.err, Claim::exact, true));
        // The older statement is kept as a labelled variant; it does not gate the run.
        out.push_back(inequality_report("lemma5a", "v1", params, t + 10.0, g.value, g.err, Claim::asymptotic, true));

        const double quota = static_cast<double>(counting_function(ctx.a, n)) / 36.0;
        const auto half = psi(ctx.a, y / 2.0, tol);
        auto r = inequality_report("lemma5b", "v2", params, half.value, g.value, half.err + g.err, Claim::asymptotic);
        out.push_back(t <= quota ? r : not_applicable(std::move(r), "T(N) <= A(N)/36 fails at N"));
    }
    return out;
}

AnalyticValue theorem2_exponent(const SumProfile& sp, double y, double tol) {
    const auto cutoff = g_cutoff(y, tol);
    if (sp.k_max < cutoff) {
        throw TruncationError("psi lower bound at Y=" + std::to_string(y) + " needs S_k up to " +
                              std::to_string(cutoff));
    }
    const double c = 2.0 / y;
    double acc = 0.0;
    for (std::uint64_t k = cutoff; k >= 1; --k) {
        if (sp.s_plus[k] != 0) acc += static_cast<double>(sp.s_plus[k]) / std::expm1(c * static_cast<double>(k));
    }
    const double one_minus = -std::expm1(-c);
    const double tail = g_tail_bound(y, cutoff) / (4.0 * one_minus * one_minus);
    const double scale = 2.3 / (2.0 * y);
    AnalyticValue v;
    v.value = scale * (std::log2(y) + 16.0 / y * acc);
    v.err = scale * 16.0 / y * tail;
    v.params = {y, tol, cutoff};
    return v;
}

std::vector<VerificationReport> lemma6_theorem2_report(const SequenceContext& ctx, const std::vector<double>& y_grid,
                                                       double tol) {
    struct Point {
        double y;
        AnalyticValue psi_y, psi_half, g, exponent;
        bool condition;
    };
    std::vector<Point> points;
    for (double y : y_grid) {
        Point p{y, psi(ctx.a, y, tol), psi(ctx.a, y / 2.0, tol), g_of(ctx.sums, y, tol),
                theorem2_exponent(ctx.sums, y, tol), false};
        p.condition = p.g.value <= std::min(p.psi_half.value, y / 9.0);
        points.push_back(p);
    }

    // Smallest c >= 0 with psi(Y) >= Y exp(-E(Y) - c/Y) at every admissible Y.
    double c = 0.0;
    std::size_t applicable = 0;
    for (const auto& p : points) {
        if (!p.condition) continue;
        ++applicable;
        c = std::max(c, p.y * (std::log(p.y / p.psi_y.value) - p.exponent.value));
    }

    std::vector<VerificationReport> out;
    for (const auto& p : points) {
        auto params = y_params(ctx, p.y);
        params["g"] = p.g.value;
        params["psi_half"] = p.psi_half.value;
        const char* why = "g(Y) <= min(psi(Y/2), Y/9) fails at Y";

        auto l6 = inequality_report("lemma6", "v2", params, p.psi_y.value, 0.49 * p.y, p.psi_y.err, Claim::asymptotic);
        out.push_back(p.condition ? l6 : not_applicable(std::move(l6), why));

        const double rhs = p.y * std::exp(-p.exponent.value - c / p.y);
        auto t2_params = params;
        t2_params["c"] = c;
        t2_params["exponent"] = p.exponent.value;
        const double err = p.psi_y.err + rhs * p.exponent.err + rounding_err(p.psi_y.value, rhs);
        auto t2 = inequality_report("theorem2", "calibrated", std::move(t2_params), p.psi_y.value, rhs, err,
                                    Claim::asymptotic);
        out.push_back(p.condition ? t2 : not_applicable(std::move(t2), why));
    }

    VerificationReport cal;
    cal.check_id = "theorem2-calibration";
    cal.variant = "min-c";
    cal.params = base_params(ctx);
    cal.params["grid"] = y_grid;
    cal.params["applicable_points"] = applicable;
    cal.lhs = c;
    cal.rhs = 0.0;
    cal.slack = c;
    cal.status = Status::informational;
    out.push_back(std::move(cal));
    return out;
}

std::vector<VerificationReport> identity28_reports(const IntegerSequence& a, std::uint64_t degree) {
    VerificationReport r;
    r.check_id = "identity28";
    r.variant = "exact";
    r.params = {{"degree", degree}, {"bound", a.bound()}};
    r.lhs = 0.0;
    r.rhs = static_cast<double>(identity28_residual(a, degree));
    r.slack = r.lhs - r.rhs;
    r.status = r.rhs == 0.0 ? Status::pass : Status::fail;
    return {r};
}

std::vector<VerificationReport> ineq33_reports(const SequenceContext& ctx, const std::vector<double>& y_grid,
                                               double tol) {
    std::vector<VerificationReport> out;
    for (double y : y_grid) {
        const auto r = ineq33_check(ctx.a, ctx.sums, y, tol);
        const double p = r.psi_y.value;
        const double lhs = p * p + y * r.g.value;
        const double rhs = 2.0 * y * r.psi_half.value;
        auto params = y_params(ctx, y);
        params["psi"] = p;
        params["psi_half"] = r.psi_half.value;
        params["g"] = r.g.value;
        out.push_back(inequality_report("ineq33", "v2", std::move(params), lhs, rhs, r.err + rounding_err(lhs, rhs),
                                        Claim::exact));
    }
    return out;
}

std::vector<VerificationReport> dyadic_reports(const std::vector<double>& x_grid, double tol) {
    std::vector<VerificationReport> out;
    for (double x : x_grid) {
        const double sum = dyadic_sum(x);
        nlohmann::json params = {{"x", x}};
        out.push_back(inequality_report("lemma1", "v2", params, dyadic_bound(x), sum, tol, Claim::exact));
        out.push_back(inequality_report("lemma1", "v1", params, dyadic_bound_sharp(x), sum, tol, Claim::exact));
    }
    return out;
}

}  // namespace addrep
