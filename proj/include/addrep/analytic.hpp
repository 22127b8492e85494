#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "addrep/partial_sums.hpp"
#include "addrep/repfuncs.hpp"
#include "addrep/sequence.hpp"

namespace addrep {

struct AnalyticParams {
    double y = 0.0;
    double tol = 0.0;
    std::uint64_t cutoff = 0;  // last index summed
};

// A floating value with a certified bound on its truncation error.
struct AnalyticValue {
    double value = 0.0;
    double err = 0.0;
    AnalyticParams params;
};

inline constexpr double kDefaultTolerance = 1e-9;

// --- Laplace weight psi(Y) = sum_{a in A} exp(-a / Y) -----------------------

// Smallest cutoff K with exp(-K/Y) / (1 - exp(-1/Y)) <= tol.
std::uint64_t psi_cutoff(double y, double tol);

// Throws PositivityError if 0 is in A, TruncationError if A.bound() < psi_cutoff.
AnalyticValue psi(const IntegerSequence& a, double y, double tol = kDefaultTolerance);

// --- correction term g(Y) = 1 + 4 (1 - e^{-2/Y}) sum_k S_k e^{-2k/Y} ---------

// Tail bound of the S-weighted sum past index k, from |S_k| <= k(k+3)/2 and
// the integral comparison. Valid for k >= Y.
double g_tail_bound(double y, std::uint64_t k);
// Tail bound of the R2-difference sum past k, from |R2(2k) - R2(2k+1)| <= k+1.
double g_difference_tail_bound(double y, std::uint64_t k);

// Smallest K >= ceil(Y) for which both tail bounds are below tol. A profile
// must reach S_K (that is, R2 up to 2K + 1).
std::uint64_t g_cutoff(double y, double tol);

// Via the S_k weighting. Throws TruncationError if sp.k_max < g_cutoff.
AnalyticValue g_of(const SumProfile& sp, double y, double tol = kDefaultTolerance);
AnalyticValue g_of(const IntegerSequence& a, double y, double tol = kDefaultTolerance);

// Via 1 + 4 sum_k (R2(2k) - R2(2k+1)) e^{-2k/Y}.
AnalyticValue g_from_differences(const RepProfile& p, double y, double tol = kDefaultTolerance);

// Both routes on the same sequence: {S-weighted, difference-weighted}.
std::pair<AnalyticValue, AnalyticValue> g_two_ways(const IntegerSequence& a, double y,
                                                   double tol = kDefaultTolerance);

// --- dyadic sum and cascade -------------------------------------------------

// sum_{n >= 0} 2^n x^(2^n), stopped once terms are decreasing and the next one
// is below tol. Throws DomainError unless 0 < x < 1.
double dyadic_sum(double x, double tol = 1e-15);
inline double dyadic_bound(double x) { return 2.0 * x / (1.0 - x); }
inline double dyadic_bound_sharp(double x) { return x * (1.0 + x) / (1.0 - x); }

using ControlFunction = std::function<double(double)>;

// H(Y; alpha) = sum_{j=0}^{alpha-1} h(Y / 2^j) / 2^(j+1).
double h_cascade(const ControlFunction& h, double y, unsigned alpha);
// Same quantity from F(y, 0) = 0, F(y, i+1) = (h(y 2^(i+1)) + F(y, i)) / 2
// evaluated at y = Y / 2^alpha.
double h_cascade_recurrence(const ControlFunction& h, double y, unsigned alpha);

// --- identity and inequality checks -----------------------------------------

// Coefficient-wise check, up to z^degree, of
//   2z f(z^2) = (1 - z) f(z)^2 + 4z sum_{k>=1} (R2(2k) - R2(2k+1)) z^{2k} - (1 + z) f(-z)^2
// in exact integers. Returns the largest absolute coefficient mismatch (0 when
// the identity holds). Requires 0 not in A and degree <= A.bound().
std::int64_t identity28_residual(const IntegerSequence& a, std::uint64_t degree);

struct Ineq33Result {
    double slack = 0.0;  // psi(Y)^2 + Y g(Y) - 2Y psi(Y/2)
    double err = 0.0;    // propagated truncation error
    AnalyticValue psi_y;
    AnalyticValue psi_half;
    AnalyticValue g;
};

Ineq33Result ineq33_check(const IntegerSequence& a, const SumProfile& sp, double y, double tol = kDefaultTolerance);
Ineq33Result ineq33_check(const IntegerSequence& a, double y, double tol = kDefaultTolerance);

// Profile length (largest n of R2) that g at every Y <= y_max needs.
std::uint64_t profile_length_for_g(double y_max, double tol = kDefaultTolerance);

}  // namespace addrep
