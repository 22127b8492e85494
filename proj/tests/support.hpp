#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "addrep/sequence.hpp"

namespace testing {

// Each integer of [first, bound] is kept independently with probability `density`.
inline addrep::IntegerSequence random_sequence(std::mt19937_64& rng, std::uint64_t bound, double density,
                                               std::uint64_t first = 1) {
    std::bernoulli_distribution keep(density);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = first; n <= bound; ++n) {
        if (keep(rng)) out.push_back(n);
    }
    return addrep::IntegerSequence(std::move(out), bound);
}

inline double random_density(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.05, 0.95)(rng);
}

// Ordered pair counts straight from the definition, over a plain element list.
inline std::vector<std::uint64_t> pair_counts(const std::vector<std::uint64_t>& a, std::uint64_t n_max) {
    std::vector<std::uint64_t> r(n_max + 1, 0);
    for (auto x : a) {
        for (auto y : a) {
            if (x + y <= n_max) ++r[x + y];
        }
    }
    return r;
}

}  // namespace testing
