#include "addrep/convolution.hpp"

#include <bit>
#include <string>

#include "addrep/errors.hpp"

namespace addrep {

namespace goldilocks {

namespace {

using u128 = unsigned __int128;

// 2^64 mod p
constexpr std::uint64_t kEpsilon = 0xffffffffULL;

// Multiplicative generator of the full group of order p - 1.
constexpr std::uint64_t kGenerator = 7;

std::uint64_t reduce128(u128 x) {
    const auto lo = static_cast<std::uint64_t>(x);
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    const std::uint64_t hi_hi = hi >> 32;
    const std::uint64_t hi_lo = hi & kEpsilon;

    // x = lo + hi_lo * 2^64 + hi_hi * 2^96, with 2^64 = eps and 2^96 = -1.
    std::uint64_t t0 = lo - hi_hi;
    if (lo < hi_hi) t0 -= kEpsilon;
    const std::uint64_t t1 = hi_lo * kEpsilon;
    std::uint64_t r = t0 + t1;
    if (r < t1) r += kEpsilon;
    if (r >= kModulus) r -= kModulus;
    return r;
}

}  // namespace

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a) {
        s += kEpsilon;
    } else if (s >= kModulus) {
        s -= kModulus;
    }
    return s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a - b;
    if (a < b) d -= kEpsilon;
    return d;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce128(static_cast<u128>(a) * b); }

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

void transform(std::span<std::uint64_t> data, bool inverse) {
    const std::size_t n = data.size();
    if (n <= 1) return;
    if (!std::has_single_bit(n) || std::countr_zero(n) > 32) {
        throw DomainError("NTT length must be a power of two <= 2^32, got " + std::to_string(n));
    }

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    std::vector<std::uint64_t> twiddle(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w = pow(kGenerator, (kModulus - 1) / len);
        if (inverse) w = pow(w, kModulus - 2);
        const std::size_t half = len / 2;
        twiddle[0] = 1;
        for (std::size_t k = 1; k < half; ++k) twiddle[k] = mul(twiddle[k - 1], w);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::uint64_t u = data[i + k];
                const std::uint64_t v = mul(data[i + k + half], twiddle[k]);
                data[i + k] = add(u, v);
                data[i + k + half] = sub(u, v);
            }
        }
    }

    if (inverse) {
        const std::uint64_t n_inv = pow(static_cast<std::uint64_t>(n), kModulus - 2);
        for (auto& x : data) x = mul(x, n_inv);
    }
}

}  // namespace goldilocks

namespace {

std::vector<std::uint64_t> convolve_bitset(const BitVector& bits, std::uint64_t limit) {
    const std::uint64_t words = limit / 64 + 1;
    auto src = bits.words();

    // Low part of the characteristic vector, masked to [0, limit].
    std::vector<std::uint64_t> fwd(words, 0);
    for (std::uint64_t w = 0; w < words; ++w) fwd[w] = src[w];
    if ((limit + 1) % 64 != 0) fwd[words - 1] &= (std::uint64_t{1} << ((limit + 1) % 64)) - 1;

    // rev[j] = chi(limit - j), zero-padded by one word so shifted reads stay in range.
    std::vector<std::uint64_t> rev(words + 1, 0);
    for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t word = fwd[w];
        while (word) {
            const auto b = static_cast<std::uint64_t>(std::countr_zero(word));
            word &= word - 1;
            const std::uint64_t j = limit - (64 * w + b);
            rev[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
    }

    // c(n) = sum_i chi(i) chi(n - i) = popcount(fwd & (rev >> (limit - n))) over i <= n.
    std::vector<std::uint64_t> out(limit + 1, 0);
    for (std::uint64_t n = 0; n <= limit; ++n) {
        const std::uint64_t shift = limit - n;
        const std::uint64_t q = shift >> 6;
        const unsigned r = static_cast<unsigned>(shift & 63);
        const std::uint64_t last = n >> 6;
        std::uint64_t count = 0;
        if (r == 0) {
            for (std::uint64_t w = 0; w <= last; ++w) count += std::popcount(fwd[w] & rev[w + q]);
        } else {
            for (std::uint64_t w = 0; w <= last; ++w) {
                const std::uint64_t shifted = (rev[w + q] >> r) | (rev[w + q + 1] << (64 - r));
                count += std::popcount(fwd[w] & shifted);
            }
        }
        out[n] = count;
    }
    return out;
}

std::vector<std::uint64_t> convolve_ntt(const BitVector& bits, std::uint64_t limit) {
    // Cyclic length must exceed 2*limit so no wrapped term lands on [0, limit].
    const std::uint64_t len = std::bit_ceil(2 * limit + 1);
    if (std::countr_zero(len) > 32) {
        throw DomainError("self-convolution length " + std::to_string(limit) + " exceeds NTT capacity");
    }
    std::vector<std::uint64_t> data(len, 0);
    for (std::uint64_t i = 0; i <= limit; ++i) data[i] = bits.test(i) ? 1 : 0;
    goldilocks::transform(data, false);
    for (auto& x : data) x = goldilocks::mul(x, x);
    goldilocks::transform(data, true);
    // Counts are at most limit + 1 < p, so residues are the exact values.
    data.resize(limit + 1);
    return data;
}

}  // namespace

std::vector<std::uint64_t> self_convolution(const BitVector& bits, std::uint64_t limit, ConvolutionPath path) {
    if (limit >= bits.size()) {
        throw OutOfBoundError("convolution limit " + std::to_string(limit) + " beyond bit vector of size " +
                              std::to_string(bits.size()));
    }
    if (path == ConvolutionPath::automatic) {
        path = limit <= kBitsetLimit ? ConvolutionPath::bitset : ConvolutionPath::ntt;
    }
    return path == ConvolutionPath::bitset ? convolve_bitset(bits, limit) : convolve_ntt(bits, limit);
}

}  // namespace addrep
