#include <doctest.h>

#include <cmath>
#include <sstream>

#include "addrep/errors.hpp"
#include "addrep/partial_sums.hpp"
#include "addrep/repfuncs.hpp"
#include "support.hpp"

using namespace addrep;

namespace {
SumProfile sums_of(std::vector<std::uint64_t> elems, std::uint64_t bound, std::uint64_t k) {
    const IntegerSequence a(std::move(elems), bound);
    return s_profile(rep_profiles(a, bound), k);
}
}  // namespace

TEST_CASE("S_k closed forms") {
    const auto full = s_profile(rep_profiles(IntegerSequence::interval(0, 2001), 2001), 1000);
    for (std::uint64_t k = 0; k <= 1000; ++k) CHECK(full.s[k] == 0);

    const auto zero_one = sums_of({0, 1}, 41, 20);
    CHECK(zero_one.s[0] == 0);
    for (std::uint64_t k = 1; k <= 20; ++k) CHECK(zero_one.s[k] == 1);

    const auto one_two = sums_of({1, 2}, 41, 20);
    CHECK(one_two.s[1] == 0);
    for (std::uint64_t k = 2; k <= 20; ++k) CHECK(one_two.s[k] == 1);
}

TEST_CASE("S_k needs R2 up to 2k+1") {
    const auto p = rep_profiles(IntegerSequence({1, 2}, 10), 10);
    CHECK_NOTHROW(s_profile(p, 4));
    CHECK_THROWS_AS(s_profile(p, 5), OutOfBoundError);
}

TEST_CASE("S_k invariants on random sequences") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const auto a = testing::random_sequence(rng, 1201, testing::random_density(rng));
        const auto p = rep_profiles(a, 1201);
        const auto sp = s_profile(p, 600);
        for (std::uint64_t k = 1; k <= 600; ++k) {
            const auto diff = static_cast<std::int64_t>(p.r2[2 * k]) - static_cast<std::int64_t>(p.r2[2 * k + 1]);
            CHECK(sp.s[k] - sp.s[k - 1] == diff);
            CHECK(sp.s_plus[k] == std::max<std::int64_t>(sp.s[k], 0));
            const auto kk = static_cast<std::int64_t>(k);
            CHECK(std::llabs(sp.s[k]) <= kk * (kk + 3) / 2);
            if (k >= 2) CHECK(sp.s[k] <= kk * kk / 2);
        }
    }
    // {1} reaches S_1 = 1 > 1/2: the quadratic bound only holds from k = 2 on.
    CHECK(sums_of({1}, 3, 1).s[1] == 1);
}

TEST_CASE("m(N)") {
    CHECK(m_of(3) == 3);
    CHECK(m_of(10) == 31);
    CHECK(m_of(100) == 613);
    CHECK(m_of(1000) == 8840);
    CHECK(m_of(1024) == 9080);
    CHECK(m_of(10000) == 114306);
    CHECK(m_of(1 << 14) == 196224);
    CHECK(m_of(1 << 16) == 884502);
    CHECK_THROWS_AS(m_of(2), DomainError);
    CHECK_THROWS_AS(m_of(0), DomainError);
    CHECK(t_range_limit(100, TRange::up_to_m) == 613);
    CHECK(t_range_limit(100, TRange::up_to_n) == 100);
}

TEST_CASE("T, T+ and the l1 sum") {
    const auto full = s_profile(rep_profiles(IntegerSequence::interval(0, 20000), 20000), 9080);
    CHECK(t_of(full, 1024) == 0);
    CHECK(t_plus(full, 1024) == 0);
    CHECK(l1_sum(full, 1024) == 0.0);

    const auto zero_one = sums_of({0, 1}, 7, 3);
    CHECK(t_of(zero_one, 3) == 1);
    CHECK(t_plus(zero_one, 3) == 1);
    CHECK(l1_sum(zero_one, 3) == doctest::Approx(1.0 + 1.0 / 2 + 1.0 / 3).epsilon(1e-15));

    const auto one_two = sums_of({1, 2}, 7, 3);
    CHECK(l1_sum(one_two, 3) == doctest::Approx(1.0 / 2 + 1.0 / 3).epsilon(1e-15));

    // All S_k negative: T is negative while T+ stays at zero.
    SumProfile neg;
    neg.k_max = 3;
    neg.s = {0, -1, -2, -1};
    neg.s_plus = {0, 0, 0, 0};
    CHECK(t_of(neg, 3) == -1);
    CHECK(t_plus(neg, 3) == 0);

    CHECK_THROWS_AS(t_of(zero_one, 4), OutOfBoundError);
    CHECK_THROWS_AS(l1_sum(zero_one, 4), OutOfBoundError);
    CHECK(t_of(zero_one, 3, TRange::up_to_n) == 1);
}

TEST_CASE("summation by parts is exact at dyadic points") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        const auto a = testing::random_sequence(rng, 601, testing::random_density(rng));
        const auto p = rep_profiles(a, 601);
        const auto sp = s_profile(p, 300);
        for (Dyadic x : {Dyadic{1, 1}, Dyadic{3, 2}, Dyadic{255, 8}, Dyadic{1, 0}}) {
            CHECK(abel_residual(p, sp, x, 300) == 0);
        }
    }
}

TEST_CASE("sums csv") {
    std::ostringstream out;
    write_sums_csv(out, sums_of({1, 2}, 7, 3));
    CHECK(out.str() == "k,S,S_plus\n1,0,0\n2,1,1\n3,1,1\n");
}
