#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dgap/bit_array.hpp"
#include "dgap/residue_set.hpp"

namespace dgap::testing {

// O(p^2) oracle: try every start t and extend while residues stay absent.
inline std::uint32_t brute_force_gap(const ResidueSet& a) {
    std::uint32_t p = a.p();
    std::uint32_t best = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
        std::uint32_t len = 0;
        while (len < p && !a.contains((t + 1 + len) % p)) ++len;
        best = std::max(best, len);
    }
    return best;
}

// Independent route: largest gap = max cyclic difference of consecutive
// sorted elements, minus one.
inline std::uint32_t sorted_diff_gap(const ResidueSet& a) {
    auto e = a.elements();
    std::uint32_t max_diff = e.front() + a.p() - e.back();
    for (std::size_t i = 1; i < e.size(); ++i)
        max_diff = std::max(max_diff, e[i] - e[i - 1]);
    return max_diff - 1;
}

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint32_t> odd_primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 3; p <= limit; ++p)
        if (trial_division_prime(p)) out.push_back(p);
    return out;
}

// Random n-subset of [0, p); deterministic given the engine state.
inline std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::uint32_t p,
                                                std::uint32_t n) {
    std::vector<std::uint32_t> all(p);
    for (std::uint32_t i = 0; i < p; ++i) all[i] = i;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::uint32_t> dist(i, p - 1);
        std::swap(all[i], all[dist(rng)]);
    }
    all.resize(n);
    std::sort(all.begin(), all.end());
    return all;
}

// Elements of an arbitrary bitmask subset (for exhaustive sweeps, p <= 31).
inline std::vector<std::uint32_t> mask_elements(std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; mask >> i; ++i)
        if ((mask >> i) & 1) out.push_back(i);
    return out;
}

}  // namespace dgap::testing
