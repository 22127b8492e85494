#include <doctest.h>

#include <set>

#include "addrep/constructions.hpp"
#include "addrep/errors.hpp"
#include "addrep/experiment.hpp"
#include "addrep/repfuncs.hpp"
#include "support.hpp"

using namespace addrep;
using V = std::vector<std::uint64_t>;

namespace {

V elems(const IntegerSequence& s) { return V(s.elements().begin(), s.elements().end()); }

// Sidon check by listing every sum a_i + a_j with i <= j.
bool brute_sidon(const V& s) {
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!seen.insert(s[i] + s[j]).second) return false;
        }
    }
    return true;
}

V brute_greedy(std::size_t count) {
    V out;
    for (std::uint64_t c = 1; out.size() < count; ++c) {
        out.push_back(c);
        if (!brute_sidon(out)) out.pop_back();
    }
    return out;
}

}  // namespace

TEST_CASE("greedy Sidon sequence") {
    CHECK(elems(greedy_sidon(1, 10)) == V{1});
    CHECK(elems(greedy_sidon(5, 100)) == V{1, 2, 4, 8, 13});
    CHECK(elems(greedy_sidon(10, 100)) == V{1, 2, 4, 8, 13, 21, 31, 45, 66, 81});
    CHECK(elems(greedy_sidon(40, 100000)) == brute_greedy(40));
    CHECK_THROWS_AS(greedy_sidon(10, 80), CapacityError);
    CHECK_THROWS_AS(greedy_sidon(0, 80), DomainError);
    CHECK(elems(greedy_sidon_up_to(100)) == V{1, 2, 4, 8, 13, 21, 31, 45, 66, 81, 97});
}

TEST_CASE("powers of two") {
    CHECK(elems(powers_of_two(32)) == V{2, 4, 8, 16, 32});
    CHECK(elems(powers_of_two(2)) == V{2});
    const auto p = powers_of_two(100);
    CHECK(elems(p) == V{2, 4, 8, 16, 32, 64});
    CHECK(is_sidon(p));
    CHECK_THROWS_AS(powers_of_two(1), DomainError);
}

TEST_CASE("doubling") {
    CHECK(elems(double_sequence(IntegerSequence({1, 2, 4, 8, 13}, 13))) == V{2, 4, 8, 16, 26});
    CHECK(double_sequence(IntegerSequence(5)).empty());
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
        // A random Sidon set: greedy over a shuffled candidate order.
        V cand(300);
        for (std::uint64_t n = 0; n < 300; ++n) cand[n] = n + 1;
        std::shuffle(cand.begin(), cand.end(), rng);
        V s;
        for (auto c : cand) {
            s.push_back(c);
            if (!brute_sidon(s)) s.pop_back();
        }
        std::sort(s.begin(), s.end());
        const auto d = double_sequence(IntegerSequence(s, 300));
        CHECK(d.bound() == 600);
        CHECK(is_sidon(d));
        CHECK(brute_sidon(elems(d)));
    }
}

TEST_CASE("generators produce Sidon sets") {
    CHECK(is_sidon(greedy_sidon(60, 100000)));
    CHECK(is_sidon(powers_of_two(1 << 20)));
    CHECK(is_sidon(double_sequence(greedy_sidon_up_to(5000))));
}

TEST_CASE("instances") {
    const auto small = build_instance(IntegerSequence({2, 4}, 10), 10);
    CHECK(elems(small.y) == V{2, 4, 6, 8});
    CHECK(elems(small.x) == V{1, 3, 5, 7, 9, 10});
    CHECK(elems(small.a) == V{1, 3, 5, 6, 7, 8, 9, 10});

    const auto empty = build_instance(IntegerSequence(5), 5);
    CHECK(empty.a == IntegerSequence::interval(1, 5));
    CHECK(empty.x == IntegerSequence::interval(1, 5));
    CHECK(empty.y.empty());

    CHECK_THROWS_AS(build_instance(IntegerSequence({2, 3}, 10), 10), ConstructionError);
    CHECK_THROWS_AS(build_instance(IntegerSequence({2, 4, 6, 8}, 10), 10), ConstructionError);  // 2+8 = 4+6
    CHECK_THROWS_AS(build_instance(IntegerSequence({2, 4}, 10), 11), OutOfBoundError);

    const auto big = build_instance(powers_of_two(1 << 17), 100000);
    CHECK(counting_function(big.y, 100000) <= 170);
    for (std::uint64_t n = 1; n <= 100000; ++n) CHECK(big.x.contains(n) != big.y.contains(n));
}

TEST_CASE("monotonicity on X") {
    CHECK(monotonicity_violations(build_instance(powers_of_two(1 << 14), 10001), 10000).empty());
    CHECK(monotonicity_violations(build_instance(IntegerSequence(50), 50), 49).empty());
    CHECK(monotonicity_violations(IntegerSequence({1}, 6), IntegerSequence::interval(1, 6), 5) == V{2});
    CHECK(monotonicity_violations(build_instance(double_sequence(greedy_sidon_up_to(4000)), 8000), 7999).empty());
    CHECK_THROWS_AS(monotonicity_violations(build_instance(IntegerSequence(50), 50), 50), OutOfBoundError);
}

TEST_CASE("coefficient formulas of the construction") {
    CHECK(coefficient_identity_residual(powers_of_two(1 << 14), 4000) == 0);
    CHECK(coefficient_identity_residual(IntegerSequence({2, 4}, 21), 10) == 0);
    CHECK(coefficient_identity_residual(IntegerSequence(41), 20) == 0);
    CHECK_THROWS_AS(coefficient_identity_residual(IntegerSequence({2, 4}, 20), 10), OutOfBoundError);
    CHECK_THROWS_AS(coefficient_identity_residual(IntegerSequence({1, 2}, 30), 10), ConstructionError);
}

TEST_CASE("density of X against the counting bound") {
    const auto b = powers_of_two(1 << 17);
    const auto inst = build_instance(b, 100000);
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 54321ULL, 100000ULL}) {
        CHECK(density_in(inst.x, n).ratio >= density_lower_bound(b, n));
    }
    CHECK(density_lower_bound(b, 100000) == doctest::Approx(1.0 - (16.0 * 16 + 16) / 100000));
}
