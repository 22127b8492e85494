#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "addrep/analytic.hpp"
#include "addrep/partial_sums.hpp"
#include "addrep/repfuncs.hpp"
#include "addrep/report.hpp"
#include "addrep/sequence.hpp"

namespace addrep {

// A sequence with its representation and partial-sum profiles, computed once
// and shared by every check of a run.
struct SequenceContext {
    IntegerSequence a;
    RepProfile profile;
    SumProfile sums;
    bool degenerate = false;  // no element in the upper half of the truncation

    // Profiles up to S_k for k = k_max, which needs a.bound() >= 2 k_max + 1.
    static SequenceContext prepare(IntegerSequence a, std::uint64_t k_max);
};

// Largest k of S_k that a run over these scales needs: m(N) for T(N) and the
// l1 sum, and the g cutoff at every Y used.
std::uint64_t required_k(std::uint64_t n_max, double y_max, double tol = kDefaultTolerance);

// Claim directions are normalised so that every report states lhs >= rhs.

// A(N)/36 > T(N). Never fails: a violated hypothesis is informational.
VerificationReport hypothesis_check(const SequenceContext& ctx, std::uint64_t n, TRange range = TRange::up_to_m);

// l1 sum of S+_n / n against (N - A(N)) / 10e - (log term) - c1, one report per
// log-term variant: "v2" (1/4) ln N, "v1" (1/7) ln N, "log2" (1/8) log2 N.
std::vector<VerificationReport> theorem1_report(const SequenceContext& ctx, std::uint64_t n, double c1);

struct Calibration {
    std::string variant;
    double value = 0.0;
    std::vector<std::uint64_t> grid;
    // Smallest grid N from which the variant holds with c1 = 0 at every larger
    // grid point; empty when it fails at the last one.
    std::optional<std::uint64_t> onset;
};

// Smallest c1 >= 0 for which each theorem1 variant holds on every N of the grid.
std::vector<Calibration> calibrate_c1(const SequenceContext& ctx, const std::vector<std::uint64_t>& n_grid);

// corollary1 ("v2" with eps, "v1" with 1/17e), corollary2 ("v1"), and the
// corollary3 trend T(N / 2^j), informational. Throws DomainError for eps <= 0.
std::vector<VerificationReport> corollary_reports(const SequenceContext& ctx, std::uint64_t n, double eps);

// Part (a) g(N) < 4T(N) + 40 ("v2") and g(N) < T(N) + 10 ("v1"); part (b)
// g(N) <= psi(N/2) where the hypothesis holds at N. Every N must be >= 40.
std::vector<VerificationReport> lemma5_report(const SequenceContext& ctx, const std::vector<std::uint64_t>& n_grid,
                                              double tol = kDefaultTolerance);

// psi(Y) >= 0.49 Y and the calibrated lower bound on psi, each applied only
// where g(Y) <= min(psi(Y/2), Y/9). The calibrated constant is reported in a
// trailing "theorem2-calibration" entry.
std::vector<VerificationReport> lemma6_theorem2_report(const SequenceContext& ctx, const std::vector<double>& y_grid,
                                                       double tol = kDefaultTolerance);

// Value of the bracketed exponent of the psi lower bound (without the c/Y
// term), with the truncation error of its infinite sum.
AnalyticValue theorem2_exponent(const SumProfile& sp, double y, double tol = kDefaultTolerance);

std::vector<VerificationReport> identity28_reports(const IntegerSequence& a, std::uint64_t degree);
std::vector<VerificationReport> ineq33_reports(const SequenceContext& ctx, const std::vector<double>& y_grid,
                                               double tol = kDefaultTolerance);
// Dyadic-sum lemma at every x: "v2" bound 2x/(1-x) and "v1" bound x(1+x)/(1-x).
std::vector<VerificationReport> dyadic_reports(const std::vector<double>& x_grid, double tol = 1e-12);

}  // namespace addrep
