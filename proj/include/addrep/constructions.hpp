#pragma once

#include <cstdint>
#include <vector>

#include "addrep/sequence.hpp"

namespace addrep {

// Lexicographically least Sidon sequence starting at 1 (1, 2, 4, 8, 13, ...),
// `count` terms, all <= cap. Throws CapacityError if cap is reached first.
IntegerSequence greedy_sidon(std::uint64_t count, std::uint64_t cap);

// {2^m : m >= 1, 2^m <= cap} with bound cap.
IntegerSequence powers_of_two(std::uint64_t cap);

// {2s : s in S} with bound 2 * S.bound().
IntegerSequence double_sequence(const IntegerSequence& s);

// The density-one monotonicity construction: with B an even Sidon set,
//   A = positive integers \ B,  Y = (B + B) ∪ B,  X = positive integers \ Y,
// all truncated to [1, n_max].
struct SarkozyInstance {
    IntegerSequence b;
    IntegerSequence a;
    IntegerSequence y;
    IntegerSequence x;
    std::uint64_t n_max = 0;
};

// Throws ConstructionError when B has an odd element or is not Sidon, and
// OutOfBoundError when B.bound() < n_max.
SarkozyInstance build_instance(const IntegerSequence& b, std::uint64_t n_max);

// Every n in X ∩ [1, n] with R1(A, n+1) < R1(A, n). Requires n + 1 <= x.bound()
// and n + 1 <= a.bound().
std::vector<std::uint64_t> monotonicity_violations(const IntegerSequence& a, const IntegerSequence& x,
                                                   std::uint64_t n);
std::vector<std::uint64_t> monotonicity_violations(const SarkozyInstance& inst, std::uint64_t n);

// For every k in [1, K] compares the increments of R1 over A = N \ B with
//   R1(2k)   - R1(2k-1) = 1 + r1(2k)   - r1(2k-1) - 2 chi_B(2k-1)
//   R1(2k+1) - R1(2k)   = 1 + r1(2k+1) - r1(2k)   - 2 chi_B(2k)
// where r1 counts ordered pairs over B. Returns the largest mismatch.
// Requires 2K + 1 <= B.bound() and B even and Sidon.
std::int64_t coefficient_identity_residual(const IntegerSequence& b, std::uint64_t k);

// 1 - (b^2 + b) / n with b = |B ∩ [1, n]|: a lower bound for density(X, n),
// since Y ∩ [1, n] holds at most b elements of B and b(b+1)/2 pair sums.
double density_lower_bound(const IntegerSequence& b, std::uint64_t n);

}  // namespace addrep
