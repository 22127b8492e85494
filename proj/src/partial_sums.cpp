#include "addrep/partial_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "addrep/errors.hpp"

namespace addrep {

using boost::multiprecision::cpp_int;

SumProfile s_profile(const RepProfile& p, std::uint64_t k) {
    if (2 * k + 1 > p.n_max) {
        throw OutOfBoundError("S_k up to k=" + std::to_string(k) + " needs R2 up to " + std::to_string(2 * k + 1) +
                              ", profile stops at " + std::to_string(p.n_max));
    }
    SumProfile sp;
    sp.k_max = k;
    sp.s.assign(k + 1, 0);
    sp.s_plus.assign(k + 1, 0);
    for (std::uint64_t l = 1; l <= k; ++l) {
        const auto even = static_cast<std::int64_t>(p.r2[2 * l]);
        const auto odd = static_cast<std::int64_t>(p.r2[2 * l + 1]);
        sp.s[l] = sp.s[l - 1] + even - odd;
        sp.s_plus[l] = std::max<std::int64_t>(sp.s[l], 0);
    }
    return sp;
}

std::uint64_t m_of(std::uint64_t n) {
    if (n < 3) throw DomainError("m(N) needs N >= 3 (log log N), got " + std::to_string(n));
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::floor(x * (std::log(x) + std::log(std::log(x)))));
}

std::uint64_t t_range_limit(std::uint64_t n, TRange range) { return range == TRange::up_to_m ? m_of(n) : n; }

namespace {

std::uint64_t checked_limit(const SumProfile& sp, std::uint64_t n, TRange range) {
    const auto limit = t_range_limit(n, range);
    if (limit > sp.k_max) {
        throw OutOfBoundError("T(N) at N=" + std::to_string(n) + " needs S up to " + std::to_string(limit) +
                              ", profile has " + std::to_string(sp.k_max));
    }
    if (limit == 0) throw DomainError("T(N) over an empty index range");
    return limit;
}

}  // namespace

std::int64_t t_of(const SumProfile& sp, std::uint64_t n, TRange range) {
    const auto limit = checked_limit(sp, n, range);
    return *std::max_element(sp.s.begin() + 1, sp.s.begin() + static_cast<std::ptrdiff_t>(limit) + 1);
}

std::int64_t t_plus(const SumProfile& sp, std::uint64_t n, TRange range) {
    const auto limit = checked_limit(sp, n, range);
    return *std::max_element(sp.s_plus.begin() + 1, sp.s_plus.begin() + static_cast<std::ptrdiff_t>(limit) + 1);
}

double l1_sum(const SumProfile& sp, std::uint64_t n) {
    const auto limit = checked_limit(sp, n, TRange::up_to_m);
    double acc = 0.0;
    for (std::uint64_t k = limit; k >= 1; --k) {
        if (sp.s_plus[k] != 0) acc += static_cast<double>(sp.s_plus[k]) / static_cast<double>(k);
    }
    return acc;
}

cpp_int abel_residual(const RepProfile& p, const SumProfile& sp, Dyadic x, std::uint64_t k) {
    if (k == 0) return 0;
    if (k > sp.k_max || 2 * k + 1 > p.n_max) {
        throw OutOfBoundError("Abel identity to K=" + std::to_string(k) + " exceeds the stored profiles");
    }
    // With x = a / 2^q, multiply through by 2^(qK): x^j becomes a^j 2^(q(K-j)).
    const cpp_int a = x.num;
    const cpp_int den = cpp_int(1) << x.log2_den;

    std::vector<cpp_int> scaled(k + 1);  // scaled[j] = a^j * 2^(q(K-j))
    cpp_int apow = 1;
    for (std::uint64_t j = 0; j <= k; ++j) {
        scaled[j] = apow << static_cast<unsigned>(x.log2_den * (k - j));
        apow *= a;
    }

    cpp_int lhs = 0;
    for (std::uint64_t j = 1; j <= k; ++j) {
        const cpp_int d = cpp_int(p.r2[2 * j]) - cpp_int(p.r2[2 * j + 1]);
        lhs += d * scaled[j];
    }

    // (1 - x) x^j scaled = (2^q - a) a^j 2^(q(K-j-1)) = (den - a) * scaled[j] / den.
    cpp_int rhs = 0;
    for (std::uint64_t j = 1; j + 1 <= k; ++j) {
        rhs += cpp_int(sp.s[j]) * ((den - a) * scaled[j] / den);
    }
    rhs += cpp_int(sp.s[k]) * scaled[k];
    return lhs - rhs;
}

void write_sums_csv(std::ostream& out, const SumProfile& sp) {
    out << "k,S,S_plus\n";
    for (std::uint64_t k = 1; k <= sp.k_max; ++k) out << k << ',' << sp.s[k] << ',' << sp.s_plus[k] << '\n';
}

}  // namespace addrep
