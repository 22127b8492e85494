#include "addrep/series.hpp"

#include <string>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("series coefficient overflows int64");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("series coefficient product overflows int64");
    return r;
}

}  // namespace

CoefficientSeries characteristic_series(const IntegerSequence& a, std::uint64_t degree) {
    if (degree > a.bound()) {
        throw OutOfBoundError("series degree " + std::to_string(degree) + " beyond bound " +
                              std::to_string(a.bound()));
    }
    CoefficientSeries f(degree);
    for (auto e : a.elements()) {
        if (e > degree) break;
        f.coeffs[e] = 1;
    }
    return f;
}

CoefficientSeries series_square(const CoefficientSeries& f) {
    std::vector<std::uint64_t> support;
    for (std::uint64_t i = 0; i <= f.degree; ++i) {
        if (f.coeffs[i] != 0) support.push_back(i);
    }
    CoefficientSeries out(f.degree);
    for (std::size_t x = 0; x < support.size(); ++x) {
        const auto i = support[x];
        // Diagonal term once, off-diagonal pairs twice.
        if (2 * i <= f.degree) {
            out.coeffs[2 * i] = checked_add(out.coeffs[2 * i], checked_mul(f.coeffs[i], f.coeffs[i]));
        }
        for (std::size_t y = x + 1; y < support.size(); ++y) {
            const auto j = support[y];
            if (i + j > f.degree) break;
            const auto prod = checked_mul(f.coeffs[i], f.coeffs[j]);
            out.coeffs[i + j] = checked_add(out.coeffs[i + j], checked_mul(prod, 2));
        }
    }
    return out;
}

CoefficientSeries negate_argument(const CoefficientSeries& f) {
    CoefficientSeries out = f;
    for (std::uint64_t i = 1; i <= f.degree; i += 2) out.coeffs[i] = checked_mul(out.coeffs[i], -1);
    return out;
}

CoefficientSeries times_one_plus_z(const CoefficientSeries& f, int sign) {
    CoefficientSeries out = f;
    for (std::uint64_t i = 1; i <= f.degree; ++i) {
        out.coeffs[i] = checked_add(out.coeffs[i], checked_mul(sign, f.coeffs[i - 1]));
    }
    return out;
}

}  // namespace addrep
