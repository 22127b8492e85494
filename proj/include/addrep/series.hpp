#pragma once

#include <cstdint>
#include <vector>

#include "addrep/sequence.hpp"

namespace addrep {

// Truncated power series with exact integer coefficients c[0..degree].
//
// All arithmetic is checked: a coefficient that would leave the int64 range
// raises OverflowError instead of wrapping.
struct CoefficientSeries {
    std::uint64_t degree = 0;
    std::vector<std::int64_t> coeffs;

    CoefficientSeries() : coeffs(1, 0) {}
    explicit CoefficientSeries(std::uint64_t d) : degree(d), coeffs(d + 1, 0) {}

    std::int64_t operator[](std::uint64_t n) const { return n <= degree ? coeffs[n] : 0; }

    friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;
};

// f(z) = sum_{a in A, a <= degree} z^a. Requires degree <= A.bound().
CoefficientSeries characteristic_series(const IntegerSequence& a, std::uint64_t degree);

// f(z)^2 truncated to f.degree.
CoefficientSeries series_square(const CoefficientSeries& f);

// f(-z).
CoefficientSeries negate_argument(const CoefficientSeries& f);

// (1 + sign * z) f(z), truncated to f.degree; sign is +1 or -1.
CoefficientSeries times_one_plus_z(const CoefficientSeries& f, int sign);

}  // namespace addrep
