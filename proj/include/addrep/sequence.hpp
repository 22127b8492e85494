#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace addrep {

// Characteristic vector of a set of integers in [0, bound], one bit per integer.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::uint64_t size_bits);

    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::uint64_t size() const { return size_; }
    std::span<const std::uint64_t> words() const { return words_; }

private:
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// A finite truncation A ∩ [0, bound] of a sequence of non-negative integers.
//
// Every value is immutable after construction. The membership bit vector is
// built on first use and shared between copies; building it is guarded by a
// once-flag so concurrent readers are safe.
class IntegerSequence {
public:
    // Throws SequenceError unless `elements` is strictly increasing and every
    // element is <= bound.
    IntegerSequence(std::vector<std::uint64_t> elements, std::uint64_t bound);

    // Empty sequence with the given bound.
    explicit IntegerSequence(std::uint64_t bound);

    // All integers of [first, bound].
    static IntegerSequence interval(std::uint64_t first, std::uint64_t bound);

    std::span<const std::uint64_t> elements() const { return elements_; }
    std::uint64_t bound() const { return bound_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    bool contains(std::uint64_t n) const;
    bool contains_zero() const { return !elements_.empty() && elements_.front() == 0; }

    const BitVector& bits() const;

    // Same elements (those <= new_bound) under a smaller bound.
    IntegerSequence truncate(std::uint64_t new_bound) const;

    friend bool operator==(const IntegerSequence& a, const IntegerSequence& b) {
        return a.bound_ == b.bound_ && a.elements_ == b.elements_;
    }

private:
    struct BitCache {
        std::once_flag once;
        BitVector bits;
    };

    std::vector<std::uint64_t> elements_;
    std::uint64_t bound_ = 0;
    std::shared_ptr<BitCache> cache_;
};

struct Density {
    std::uint64_t hits = 0;
    std::uint64_t range = 0;
    double ratio = 0.0;
};

// |A ∩ [1, N]|. Element 0 is never counted.
std::uint64_t counting_function(const IntegerSequence& a, std::uint64_t n);

// {n ∈ [1, n_max] : n ∉ A} with bound n_max.
IntegerSequence complement(const IntegerSequence& a, std::uint64_t n_max);

// {b + c <= n_max : b ∈ B, c ∈ C} with bound n_max.
IntegerSequence sumset(const IntegerSequence& b, const IntegerSequence& c, std::uint64_t n_max);

// Union of two sequences; the result bound is the smaller of the two bounds.
IntegerSequence set_union(const IntegerSequence& a, const IntegerSequence& b);

Density density_in(const IntegerSequence& x, std::uint64_t n);

// 64-bit FNV-1a over the bound and the elements; used to tag reports.
std::uint64_t digest(const IntegerSequence& a);

}  // namespace addrep
