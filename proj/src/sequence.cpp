#include "addrep/sequence.hpp"

#include <algorithm>
#include <string>

#include "addrep/errors.hpp"

namespace addrep {

BitVector::BitVector(std::uint64_t size_bits) : size_(size_bits), words_((size_bits + 63) / 64, 0) {}

IntegerSequence::IntegerSequence(std::vector<std::uint64_t> elements, std::uint64_t bound)
    : elements_(std::move(elements)), bound_(bound), cache_(std::make_shared<BitCache>()) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] <= elements_[i - 1]) {
            throw SequenceError("elements not strictly increasing at index " + std::to_string(i) + " (" +
                                std::to_string(elements_[i - 1]) + ", " + std::to_string(elements_[i]) + ")");
        }
    }
    if (!elements_.empty() && elements_.back() > bound_) {
        throw SequenceError("element " + std::to_string(elements_.back()) + " exceeds bound " +
                            std::to_string(bound_));
    }
}

IntegerSequence::IntegerSequence(std::uint64_t bound) : IntegerSequence(std::vector<std::uint64_t>{}, bound) {}

IntegerSequence IntegerSequence::interval(std::uint64_t first, std::uint64_t bound) {
    std::vector<std::uint64_t> v;
    if (first <= bound) {
        v.reserve(bound - first + 1);
        for (std::uint64_t n = first; n <= bound; ++n) v.push_back(n);
    }
    return IntegerSequence(std::move(v), bound);
}

bool IntegerSequence::contains(std::uint64_t n) const {
    if (n > bound_) {
        throw OutOfBoundError("membership of " + std::to_string(n) + " asked beyond bound " + std::to_string(bound_));
    }
    return bits().test(n);
}

const BitVector& IntegerSequence::bits() const {
    std::call_once(cache_->once, [this] {
        BitVector bv(bound_ + 1);
        for (auto e : elements_) bv.set(e);
        cache_->bits = std::move(bv);
    });
    return cache_->bits;
}

IntegerSequence IntegerSequence::truncate(std::uint64_t new_bound) const {
    if (new_bound > bound_) {
        throw OutOfBoundError("cannot extend truncation from " + std::to_string(bound_) + " to " +
                              std::to_string(new_bound));
    }
    auto end = std::upper_bound(elements_.begin(), elements_.end(), new_bound);
    return IntegerSequence(std::vector<std::uint64_t>(elements_.begin(), end), new_bound);
}

std::uint64_t counting_function(const IntegerSequence& a, std::uint64_t n) {
    if (n > a.bound()) {
        throw OutOfBoundError("A(N) asked for N=" + std::to_string(n) + " beyond bound " + std::to_string(a.bound()));
    }
    auto els = a.elements();
    auto lo = std::lower_bound(els.begin(), els.end(), std::uint64_t{1});
    auto hi = std::upper_bound(els.begin(), els.end(), n);
    return static_cast<std::uint64_t>(hi - lo);
}

IntegerSequence complement(const IntegerSequence& a, std::uint64_t n_max) {
    if (n_max > a.bound()) {
        throw OutOfBoundError("complement up to " + std::to_string(n_max) + " beyond bound " +
                              std::to_string(a.bound()));
    }
    std::vector<std::uint64_t> out;
    auto els = a.elements();
    auto it = std::lower_bound(els.begin(), els.end(), std::uint64_t{1});
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (it != els.end() && *it == n) {
            ++it;
        } else {
            out.push_back(n);
        }
    }
    return IntegerSequence(std::move(out), n_max);
}

IntegerSequence sumset(const IntegerSequence& b, const IntegerSequence& c, std::uint64_t n_max) {
    BitVector hit(n_max + 1);
    for (auto x : b.elements()) {
        if (x > n_max) break;
        for (auto y : c.elements()) {
            if (y > n_max - x) break;
            hit.set(x + y);
        }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (hit.test(n)) out.push_back(n);
    }
    return IntegerSequence(std::move(out), n_max);
}

IntegerSequence set_union(const IntegerSequence& a, const IntegerSequence& b) {
    const auto bound = std::min(a.bound(), b.bound());
    std::vector<std::uint64_t> out;
    auto ea = a.elements();
    auto eb = b.elements();
    std::set_union(ea.begin(), std::upper_bound(ea.begin(), ea.end(), bound), eb.begin(),
                   std::upper_bound(eb.begin(), eb.end(), bound), std::back_inserter(out));
    return IntegerSequence(std::move(out), bound);
}

Density density_in(const IntegerSequence& x, std::uint64_t n) {
    if (n == 0) throw DomainError("density over an empty range [1, 0]");
    Density d;
    d.hits = counting_function(x, n);
    d.range = n;
    d.ratio = static_cast<double>(d.hits) / static_cast<double>(n);
    return d;
}

std::uint64_t digest(const IntegerSequence& a) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(a.bound());
    for (auto e : a.elements()) mix(e);
    return h;
}

}  // namespace addrep
