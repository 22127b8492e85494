#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "addrep/repfuncs.hpp"

namespace addrep {

// Prefix sums of the even/odd R2 differences:
//   s[k] = sum_{l=1..k} (R2(2l) - R2(2l+1)),   s_plus[k] = max(s[k], 0).
// Both vectors have k_max + 1 entries; index 0 holds the empty sum.
struct SumProfile {
    std::uint64_t k_max = 0;
    std::vector<std::int64_t> s;
    std::vector<std::int64_t> s_plus;

    std::int64_t at(std::uint64_t k) const { return s[k]; }
};

// Range over which T(N) takes its maximum.
enum class TRange {
    up_to_m,  // n <= m(N), the default
    up_to_n,  // n <= N, the older formulation
};

// Requires 2 * k + 1 <= p.n_max.
SumProfile s_profile(const RepProfile& p, std::uint64_t k);

// floor(N (ln N + ln ln N)); N >= 3.
std::uint64_t m_of(std::uint64_t n);

// Index limit used by t_of / l1_sum for a given range convention.
std::uint64_t t_range_limit(std::uint64_t n, TRange range);

// max_{1 <= k <= limit} s[k] and the same for s_plus.
std::int64_t t_of(const SumProfile& sp, std::uint64_t n, TRange range = TRange::up_to_m);
std::int64_t t_plus(const SumProfile& sp, std::uint64_t n, TRange range = TRange::up_to_m);

// sum_{k=1..m(N)} s_plus[k] / k, accumulated from the largest k down.
double l1_sum(const SumProfile& sp, std::uint64_t n);

// A dyadic rational num / 2^log2_den.
struct Dyadic {
    std::uint64_t num = 1;
    unsigned log2_den = 1;
};

// Exact residual of the summation-by-parts identity
//   sum_{k=1..K} (R2(2k) - R2(2k+1)) x^k = (1 - x) sum_{k=1..K-1} s[k] x^k + s[K] x^K
// scaled by 2^(K * log2_den) so both sides are integers. Zero when the identity
// holds; the left side is taken from `p`, the right side from `sp`.
boost::multiprecision::cpp_int abel_residual(const RepProfile& p, const SumProfile& sp, Dyadic x,
                                             std::uint64_t k);

// CSV with header `k,S,S_plus`.
void write_sums_csv(std::ostream& out, const SumProfile& sp);

}  // namespace addrep
