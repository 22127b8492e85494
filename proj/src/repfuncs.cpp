#include "addrep/repfuncs.hpp"

#include <ostream>
#include <string>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

void require_in_bound(const IntegerSequence& a, std::uint64_t n) {
    if (n > a.bound()) {
        throw OutOfBoundError("profile up to " + std::to_string(n) + " requested beyond bound " +
                              std::to_string(a.bound()));
    }
}

RepProfile derive_from_r1(const IntegerSequence& a, std::uint64_t n, std::vector<std::uint64_t> r1) {
    RepProfile p;
    p.n_max = n;
    p.r2.resize(n + 1);
    p.r3.resize(n + 1);
    const auto& bits = a.bits();
    for (std::uint64_t k = 0; k <= n; ++k) {
        const std::uint64_t diag = (k % 2 == 0 && bits.test(k / 2)) ? 1 : 0;
        p.r3[k] = (r1[k] - diag) / 2;
        p.r2[k] = p.r3[k] + diag;
    }
    p.r1 = std::move(r1);
    return p;
}

}  // namespace

RepProfile rep_profiles(const IntegerSequence& a, std::uint64_t n, ConvolutionPath path) {
    require_in_bound(a, n);
    return derive_from_r1(a, n, self_convolution(a.bits(), n, path));
}

RepProfile naive_profiles(const IntegerSequence& a, std::uint64_t n) {
    require_in_bound(a, n);
    RepProfile p;
    p.n_max = n;
    p.r1.assign(n + 1, 0);
    p.r2.assign(n + 1, 0);
    p.r3.assign(n + 1, 0);
    auto els = a.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = 0; j < els.size(); ++j) {
            const std::uint64_t s = els[i] + els[j];
            if (s > n) continue;
            ++p.r1[s];
            if (i <= j) ++p.r2[s];
            if (i < j) ++p.r3[s];
        }
    }
    return p;
}

std::vector<std::uint64_t> r1_over(const IntegerSequence& b, std::uint64_t n) {
    require_in_bound(b, n);
    return self_convolution(b.bits(), n);
}

bool is_sidon(const IntegerSequence& b, std::uint64_t n) {
    const auto p = rep_profiles(b, n);
    for (auto v : p.r2) {
        if (v > 1) return false;
    }
    return true;
}

bool is_sidon(const IntegerSequence& b) {
    if (b.empty()) return true;
    const std::uint64_t top = 2 * b.elements().back();
    const IntegerSequence widened(std::vector<std::uint64_t>(b.elements().begin(), b.elements().end()), top);
    return is_sidon(widened, top);
}

void write_profile_csv(std::ostream& out, const RepProfile& p) {
    out << "n,R1,R2,R3\n";
    for (std::uint64_t k = 0; k <= p.n_max; ++k) {
        out << k << ',' << p.r1[k] << ',' << p.r2[k] << ',' << p.r3[k] << '\n';
    }
}

}  // namespace addrep
