#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "addrep/sequence.hpp"

namespace addrep {

enum class ConvolutionPath {
    automatic,  // bitset up to kBitsetLimit, NTT above
    bitset,     // word-packed shift-and-popcount, O(N^2 / 64)
    ntt,        // number-theoretic transform over the Goldilocks prime
};

inline constexpr std::uint64_t kBitsetLimit = std::uint64_t{1} << 16;

// Exact ordered-pair counts c(n) = #{(i, j) : i + j = n, i, j in S} for
// 0 <= n <= limit, where S is the set of bits of `bits` at positions <= limit.
// Requires limit < bits.size().
std::vector<std::uint64_t> self_convolution(const BitVector& bits, std::uint64_t limit,
                                            ConvolutionPath path = ConvolutionPath::automatic);

// Goldilocks field arithmetic (p = 2^64 - 2^32 + 1), exposed for tests.
namespace goldilocks {

inline constexpr std::uint64_t kModulus = 0xffffffff00000001ULL;

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);

// In-place cyclic NTT; data.size() must be a power of two <= 2^32.
void transform(std::span<std::uint64_t> data, bool inverse);

}  // namespace goldilocks

}  // namespace addrep
