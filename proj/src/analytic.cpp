#include "addrep/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "addrep/errors.hpp"
#include "addrep/series.hpp"

namespace addrep {

namespace {

void require_positive_scale(double y, double tol) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("scale Y must be positive and finite");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

// 1 - e^{-t} without cancellation.
double one_minus_exp_neg(double t) { return -std::expm1(-t); }

// Smallest K >= lo with bound(K) <= tol, for a bound that decreases on [lo, inf).
template <typename Bound>
std::uint64_t search_cutoff(std::uint64_t lo, double tol, Bound bound) {
    if (bound(lo) <= tol) return lo;
    std::uint64_t step = std::max<std::uint64_t>(lo, 16);
    std::uint64_t hi = lo + step;
    while (bound(hi) > tol) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (bound(mid) <= tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

std::uint64_t psi_cutoff(double y, double tol) {
    require_positive_scale(y, tol);
    const double k = y * std::log(1.0 / (tol * one_minus_exp_neg(1.0 / y)));
    return k <= 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(k));
}

AnalyticValue psi(const IntegerSequence& a, double y, double tol) {
    require_positive_scale(y, tol);
    if (a.contains_zero()) throw PositivityError("psi(Y) requires a sequence of positive integers");
    const auto cutoff = psi_cutoff(y, tol);
    if (a.bound() < cutoff) {
        throw TruncationError("psi(" + std::to_string(y) + ") to tolerance " + std::to_string(tol) +
                              " needs elements up to " + std::to_string(cutoff) + ", bound is " +
                              std::to_string(a.bound()));
    }
    auto els = a.elements();
    auto end = std::upper_bound(els.begin(), els.end(), cutoff);
    double acc = 0.0;
    for (auto it = end; it != els.begin();) {
        --it;
        acc += std::exp(-static_cast<double>(*it) / y);
    }
    AnalyticValue v;
    v.value = acc;
    v.err = std::exp(-static_cast<double>(cutoff + 1) / y) / one_minus_exp_neg(1.0 / y);
    v.params = {y, tol, cutoff};
    return v;
}

double g_tail_bound(double y, std::uint64_t k) {
    const double c = 2.0 / y;
    const double x = static_cast<double>(k);
    const double e = std::exp(-c * x);
    const double int_x2 = e * (x * x / c + 2.0 * x / (c * c) + 2.0 / (c * c * c));
    const double int_x = e * (x / c + 1.0 / (c * c));
    return 4.0 * one_minus_exp_neg(c) * 0.5 * (int_x2 + 3.0 * int_x);
}

double g_difference_tail_bound(double y, std::uint64_t k) {
    const double c = 2.0 / y;
    const double x = static_cast<double>(k);
    return 4.0 * std::exp(-c * x) * (x / c + 1.0 / (c * c) + 1.0 / c);
}

std::uint64_t g_cutoff(double y, double tol) {
    require_positive_scale(y, tol);
    const auto lo = static_cast<std::uint64_t>(std::ceil(y));
    const auto k1 = search_cutoff(lo, tol, [y](std::uint64_t k) { return g_tail_bound(y, k); });
    const auto k2 = search_cutoff(lo, tol, [y](std::uint64_t k) { return g_difference_tail_bound(y, k); });
    return std::max({k1, k2, std::uint64_t{1}});
}

std::uint64_t profile_length_for_g(double y_max, double tol) { return 2 * g_cutoff(y_max, tol) + 1; }

AnalyticValue g_of(const SumProfile& sp, double y, double tol) {
    const auto cutoff = g_cutoff(y, tol);
    if (sp.k_max < cutoff) {
        throw TruncationError("g(" + std::to_string(y) + ") to tolerance " + std::to_string(tol) +
                              " needs S_k up to k=" + std::to_string(cutoff) + ", profile has " +
                              std::to_string(sp.k_max));
    }
    const double c = 2.0 / y;
    double acc = 0.0;
    for (std::uint64_t k = cutoff; k >= 1; --k) {
        if (sp.s[k] != 0) acc += static_cast<double>(sp.s[k]) * std::exp(-c * static_cast<double>(k));
    }
    AnalyticValue v;
    v.value = 1.0 + 4.0 * one_minus_exp_neg(c) * acc;
    v.err = g_tail_bound(y, cutoff);
    v.params = {y, tol, cutoff};
    return v;
}

namespace {

RepProfile profile_for_g(const IntegerSequence& a, double y, double tol) {
    const auto need = 2 * g_cutoff(y, tol) + 1;
    if (a.bound() < need) {
        throw TruncationError("g(" + std::to_string(y) + ") needs the sequence up to " + std::to_string(need) +
                              ", bound is " + std::to_string(a.bound()));
    }
    return rep_profiles(a, need);
}

}  // namespace

AnalyticValue g_of(const IntegerSequence& a, double y, double tol) {
    const auto p = profile_for_g(a, y, tol);
    return g_of(s_profile(p, g_cutoff(y, tol)), y, tol);
}

AnalyticValue g_from_differences(const RepProfile& p, double y, double tol) {
    const auto cutoff = g_cutoff(y, tol);
    if (2 * cutoff + 1 > p.n_max) {
        throw TruncationError("g(" + std::to_string(y) + ") needs R2 up to " + std::to_string(2 * cutoff + 1) +
                              ", profile stops at " + std::to_string(p.n_max));
    }
    const double c = 2.0 / y;
    double acc = 0.0;
    for (std::uint64_t k = cutoff; k >= 1; --k) {
        const auto d = static_cast<std::int64_t>(p.r2[2 * k]) - static_cast<std::int64_t>(p.r2[2 * k + 1]);
        if (d != 0) acc += static_cast<double>(d) * std::exp(-c * static_cast<double>(k));
    }
    AnalyticValue v;
    v.value = 1.0 + 4.0 * acc;
    v.err = g_difference_tail_bound(y, cutoff);
    v.params = {y, tol, cutoff};
    return v;
}

std::pair<AnalyticValue, AnalyticValue> g_two_ways(const IntegerSequence& a, double y, double tol) {
    const auto p = profile_for_g(a, y, tol);
    const auto sp = s_profile(p, g_cutoff(y, tol));
    return {g_of(sp, y, tol), g_from_differences(p, y, tol)};
}

double dyadic_sum(double x, double tol) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("dyadic sum needs 0 < x < 1");
    double acc = 0.0;
    double power = x;  // x^(2^n)
    double weight = 1.0;  // 2^n
    for (;;) {
        acc += weight * power;
        const double next_power = power * power;
        const double next = 2.0 * weight * next_power;
        // Term ratio is 2 x^(2^n): once below one the terms only shrink.
        if (next_power == 0.0 || (next < tol && 2.0 * power < 1.0)) break;
        power = next_power;
        weight *= 2.0;
    }
    return acc;
}

double h_cascade(const ControlFunction& h, double y, unsigned alpha) {
    double acc = 0.0;
    for (unsigned j = 0; j < alpha; ++j) acc += std::ldexp(h(std::ldexp(y, -static_cast<int>(j))), -static_cast<int>(j + 1));
    return acc;
}

double h_cascade_recurrence(const ControlFunction& h, double y, unsigned alpha) {
    const double base = std::ldexp(y, -static_cast<int>(alpha));
    double f = 0.0;
    for (unsigned i = 0; i < alpha; ++i) f = 0.5 * (h(std::ldexp(base, static_cast<int>(i + 1))) + f);
    return f;
}

std::int64_t identity28_residual(const IntegerSequence& a, std::uint64_t degree) {
    if (a.contains_zero()) {
        throw PositivityError("the coefficient identity needs 0 not in A (the k >= 1 sum omits the k = 0 term)");
    }
    const auto f = characteristic_series(a, degree);
    const auto sq = series_square(f);
    const auto sq_neg = series_square(negate_argument(f));
    const auto left_sq = times_one_plus_z(sq, -1);
    const auto right_sq = times_one_plus_z(sq_neg, +1);
    const auto prof = rep_profiles(a, degree);
    const auto& bits = a.bits();

    std::int64_t worst = 0;
    for (std::uint64_t n = 0; n <= degree; ++n) {
        const std::int64_t lhs = (n % 2 == 1 && bits.test((n - 1) / 2)) ? 2 : 0;
        std::int64_t rhs = left_sq[n] - right_sq[n];
        if (n % 2 == 1 && n >= 3) {
            const std::uint64_t k = (n - 1) / 2;
            rhs += 4 * (static_cast<std::int64_t>(prof.r2[2 * k]) - static_cast<std::int64_t>(prof.r2[2 * k + 1]));
        }
        worst = std::max(worst, lhs > rhs ? lhs - rhs : rhs - lhs);
    }
    return worst;
}

Ineq33Result ineq33_check(const IntegerSequence& a, const SumProfile& sp, double y, double tol) {
    Ineq33Result r;
    r.psi_y = psi(a, y, tol);
    r.psi_half = psi(a, y / 2.0, tol);
    r.g = g_of(sp, y, tol);
    const double p = r.psi_y.value;
    r.slack = p * p + y * r.g.value - 2.0 * y * r.psi_half.value;
    r.err = 2.0 * p * r.psi_y.err + r.psi_y.err * r.psi_y.err + y * r.g.err + 2.0 * y * r.psi_half.err;
    return r;
}

Ineq33Result ineq33_check(const IntegerSequence& a, double y, double tol) {
    const auto p = profile_for_g(a, y, tol);
    return ineq33_check(a, s_profile(p, g_cutoff(y, tol)), y, tol);
}

}  // namespace addrep
