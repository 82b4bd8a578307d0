#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dgap/bit_array.hpp"
#include "dgap/rational.hpp"
#include "dgap/residue_set.hpp"

namespace dgap {

// Largest gap g(A): the longest run g such that {t+1, ..., t+g} (mod p)
// misses A, together with the smallest such witness t.
struct GapReport {
    std::uint32_t gap = 0;
    std::uint32_t witness_t = 0;
    std::uint32_t p = 0;

    friend bool operator==(const GapReport&, const GapReport&) = default;
};

// Per-dilate gap table g(d*A) for d = 1..p-1 with its maximum and the
// normalized value L(A) = |A| * sup / p.
struct DilateScan {
    std::vector<std::uint32_t> per_d;  // index d, entry 0 unused
    std::uint32_t sup = 0;
    std::uint32_t argmax_d = 0;  // least maximizer
    Rational l_value;

    friend bool operator==(const DilateScan&, const DilateScan&) = default;
};

GapReport largest_gap(const ResidueSet& a);

// Gap of a single dilate d*A without materializing the set.
std::uint32_t dilate_gap(const ResidueSet& a, std::uint32_t d);

DilateScan dilate_scan(const ResidueSet& a);

// p/n - 1, the pigeonhole lower bound on g(A).
Rational pigeonhole_bound(PrimeModulus p, std::uint64_t n);

// 2(p/n - 1), the lower bound on sup_d g(d*A) for n >= 2, and the least
// integer above it (valid because the sup is an integer).
Rational theorem_bound(PrimeModulus p, std::uint64_t n);
std::int64_t theorem_bound_int(PrimeModulus p, std::uint64_t n);

// Length of the shortest cyclic interval containing A; equals p - g(A).
// Computed from sorted consecutive differences, independent of the bit
// kernels.
std::uint32_t min_covering_arc(const ResidueSet& a);

// True iff g(d*A) < m for every d in F_p^x, i.e. every line y = dx + t of
// nonzero slope meets A x {1..m}. Requires 1 <= m < p.
bool check_covering(const ResidueSet& a, std::uint32_t m);

// Reusable scratch for scanning many dilates of same-modulus sets; used by
// the search loops where allocation per candidate would dominate.
class DilateSupScanner {
public:
    explicit DilateSupScanner(PrimeModulus p);

    std::uint32_t gap_of_dilate(std::span<const std::uint32_t> elements, std::uint32_t d);

    // (sup, least argmax d) over d = 1..p-1, using the reflection
    // g(d*A) = g((p-d)*A) to halve the work.
    std::pair<std::uint32_t, std::uint32_t> sup_argmax(std::span<const std::uint32_t> elements);

private:
    std::uint32_t p_;
    BitArray bits_;
    std::vector<std::uint32_t> positions_;
};

}  // namespace dgap
