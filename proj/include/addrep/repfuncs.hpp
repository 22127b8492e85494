#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "addrep/convolution.hpp"
#include "addrep/sequence.hpp"

namespace addrep {

// Representation counts of every n in [0, n_max]:
//   r1[n]  ordered pairs (a, a') with a + a' = n
//   r2[n]  unordered pairs, repetition allowed (a <= a')
//   r3[n]  unordered pairs of distinct elements (a < a')
struct RepProfile {
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> r1;
    std::vector<std::uint64_t> r2;
    std::vector<std::uint64_t> r3;

    friend bool operator==(const RepProfile&, const RepProfile&) = default;
};

// Exact profile via self-convolution of the characteristic vector; r2 and r3
// are derived from r1 and the diagonal indicator [n even and n/2 in A].
// Throws OutOfBoundError when n > a.bound().
RepProfile rep_profiles(const IntegerSequence& a, std::uint64_t n,
                        ConvolutionPath path = ConvolutionPath::automatic);

// Reference implementation by a double loop over element pairs. Meant as a
// test oracle for |A| up to a few thousand.
RepProfile naive_profiles(const IntegerSequence& a, std::uint64_t n);

// Ordered-pair counts r1(n) over B for 0 <= n <= n_max.
std::vector<std::uint64_t> r1_over(const IntegerSequence& b, std::uint64_t n);

// Sidon (B2) test at definition level: r2 <= 1 on [0, n].
bool is_sidon(const IntegerSequence& b, std::uint64_t n);
// Same, up to twice the largest element (or the bound, if smaller).
bool is_sidon(const IntegerSequence& b);

// CSV with header `n,R1,R2,R3`.
void write_profile_csv(std::ostream& out, const RepProfile& p);

}  // namespace addrep
