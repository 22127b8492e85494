#include "addrep/constructions.hpp"

#include <algorithm>
#include <string>

#include "addrep/errors.hpp"
#include "addrep/repfuncs.hpp"

namespace addrep {

IntegerSequence greedy_sidon(std::uint64_t count, std::uint64_t cap) {
    if (count == 0) throw DomainError("greedy_sidon needs count >= 1");
    std::vector<std::uint64_t> terms;
    BitVector sums(2 * cap + 1);
    for (std::uint64_t cand = 1; cand <= cap && terms.size() < count; ++cand) {
        bool ok = !sums.test(2 * cand);
        for (std::size_t i = 0; ok && i < terms.size(); ++i) ok = !sums.test(cand + terms[i]);
        if (!ok) continue;
        for (auto t : terms) sums.set(cand + t);
        sums.set(2 * cand);
        terms.push_back(cand);
    }
    if (terms.size() < count) {
        throw CapacityError("greedy Sidon sequence reached cap " + std::to_string(cap) + " after " +
                            std::to_string(terms.size()) + " of " + std::to_string(count) + " terms");
    }
    return IntegerSequence(std::move(terms), cap);
}

IntegerSequence powers_of_two(std::uint64_t cap) {
    if (cap < 2) throw DomainError("powers_of_two needs cap >= 2");
    std::vector<std::uint64_t> v;
    for (std::uint64_t p = 2; p <= cap; p *= 2) {
        v.push_back(p);
        if (p > cap / 2) break;
    }
    return IntegerSequence(std::move(v), cap);
}

IntegerSequence double_sequence(const IntegerSequence& s) {
    std::vector<std::uint64_t> v;
    v.reserve(s.size());
    for (auto e : s.elements()) v.push_back(2 * e);
    return IntegerSequence(std::move(v), 2 * s.bound());
}

namespace {

void require_even_sidon(const IntegerSequence& b) {
    for (auto e : b.elements()) {
        if (e % 2 != 0) throw ConstructionError("B must consist of even integers, found " + std::to_string(e));
    }
    if (!is_sidon(b)) throw ConstructionError("B is not a Sidon set");
}

}  // namespace

SarkozyInstance build_instance(const IntegerSequence& b, std::uint64_t n_max) {
    if (b.bound() < n_max) {
        throw OutOfBoundError("B is known up to " + std::to_string(b.bound()) + " but the instance needs " +
                              std::to_string(n_max));
    }
    require_even_sidon(b);
    auto b_trunc = b.truncate(n_max);
    auto a = complement(b_trunc, n_max);
    auto y = set_union(sumset(b_trunc, b_trunc, n_max), b_trunc);
    auto x = complement(y, n_max);
    return SarkozyInstance{std::move(b_trunc), std::move(a), std::move(y), std::move(x), n_max};
}

std::vector<std::uint64_t> monotonicity_violations(const IntegerSequence& a, const IntegerSequence& x,
                                                   std::uint64_t n) {
    if (n + 1 > a.bound() || n > x.bound()) {
        throw OutOfBoundError("monotonicity up to n=" + std::to_string(n) + " needs R1 at " + std::to_string(n + 1) +
                              " (A bound " + std::to_string(a.bound()) + ", X bound " + std::to_string(x.bound()) +
                              ")");
    }
    const auto r1 = r1_over(a, n + 1);
    std::vector<std::uint64_t> out;
    for (auto e : x.elements()) {
        if (e == 0) continue;
        if (e > n) break;
        if (r1[e + 1] < r1[e]) out.push_back(e);
    }
    return out;
}

std::vector<std::uint64_t> monotonicity_violations(const SarkozyInstance& inst, std::uint64_t n) {
    if (n + 1 > inst.n_max) {
        throw OutOfBoundError("instance built to " + std::to_string(inst.n_max) + ", check needs " +
                              std::to_string(n + 1));
    }
    return monotonicity_violations(inst.a, inst.x, n);
}

std::int64_t coefficient_identity_residual(const IntegerSequence& b, std::uint64_t k) {
    const std::uint64_t top = 2 * k + 1;
    if (top > b.bound()) {
        throw OutOfBoundError("coefficient check to k=" + std::to_string(k) + " needs B up to " +
                              std::to_string(top) + ", bound is " + std::to_string(b.bound()));
    }
    require_even_sidon(b);
    const auto a = complement(b, top);
    const auto big = r1_over(a, top);
    const auto small = r1_over(b, top);
    const auto& in_b = b.bits();

    auto r = [](const std::vector<std::uint64_t>& v, std::uint64_t i) { return static_cast<std::int64_t>(v[i]); };
    auto chi = [&in_b](std::uint64_t i) -> std::int64_t { return in_b.test(i) ? 1 : 0; };

    std::int64_t worst = 0;
    auto record = [&worst](std::int64_t lhs, std::int64_t rhs) {
        worst = std::max(worst, lhs > rhs ? lhs - rhs : rhs - lhs);
    };
    for (std::uint64_t j = 1; j <= k; ++j) {
        const std::uint64_t even = 2 * j;
        record(r(big, even) - r(big, even - 1), 1 + r(small, even) - r(small, even - 1) - 2 * chi(even - 1));
        record(r(big, even + 1) - r(big, even), 1 + r(small, even + 1) - r(small, even) - 2 * chi(even));
    }
    return worst;
}

double density_lower_bound(const IntegerSequence& b, std::uint64_t n) {
    const auto cnt = static_cast<double>(counting_function(b, n));
    return 1.0 - (cnt * cnt + cnt) / static_cast<double>(n);
}

}  // namespace addrep
