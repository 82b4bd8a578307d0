#include "dgap/gaps.hpp"

#include <stdexcept>

#include "dgap/kernels.hpp"

namespace dgap {

DilateSupScanner::DilateSupScanner(PrimeModulus p) : p_(p.value()), bits_(p.value()) {}

std::uint32_t DilateSupScanner::gap_of_dilate(std::span<const std::uint32_t> elements,
                                              std::uint32_t d) {
    positions_.clear();
    for (std::uint32_t a : elements) {
        std::uint32_t pos = mul_mod(d, a, p_);
        positions_.push_back(pos);
        bits_.set(pos);
    }
    std::uint32_t gap = kernels::longest_zero_run_cyclic(bits_);
    for (std::uint32_t pos : positions_) bits_.reset(pos);
    return gap;
}

std::pair<std::uint32_t, std::uint32_t> DilateSupScanner::sup_argmax(
    std::span<const std::uint32_t> elements) {
    // g(d*A) = g((p-d)*A), so scanning d = 1..(p-1)/2 sees every value; the
    // least maximizer always lies in the lower half.
    std::uint32_t sup = 0, argmax = 1;
    for (std::uint32_t d = 1; d <= (p_ - 1) / 2; ++d) {
        std::uint32_t g = gap_of_dilate(elements, d);
        if (g > sup) {
            sup = g;
            argmax = d;
        }
    }
    return {sup, argmax};
}

GapReport largest_gap(const ResidueSet& a) {
    std::uint32_t p = a.p();
    std::uint32_t gap = kernels::longest_zero_run_cyclic(a.bits());
    if (gap == 0) return {0, 0, p};

    // Walk the cycle starting just past one member; every maximal run is
    // then closed by a set bit, including the one crossing index 0.
    std::uint32_t first = a.elements()[0];
    std::uint32_t best = 0;
    std::uint32_t witness = p;
    std::uint32_t cur = 0, start = 0;
    for (std::uint32_t off = 1; off <= p; ++off) {
        std::uint32_t i = first + off;
        if (i >= p) i -= p;
        if (!a.contains(i)) {
            if (cur == 0) start = i;
            ++cur;
        } else if (cur > 0) {
            if (cur > best) best = cur;
            if (cur == gap) {
                std::uint32_t t = start == 0 ? p - 1 : start - 1;
                if (t < witness) witness = t;
            }
            cur = 0;
        }
    }
    if (best != gap || witness == p)
        throw std::logic_error("gap kernel disagrees with run enumeration");
    return {gap, witness, p};
}

std::uint32_t dilate_gap(const ResidueSet& a, std::uint32_t d) {
    std::uint32_t dr = d % a.p();
    if (dr == 0) throw std::domain_error("dilation by zero");
    DilateSupScanner scanner(a.modulus());
    return scanner.gap_of_dilate(a.elements(), dr);
}

DilateScan dilate_scan(const ResidueSet& a) {
    std::uint32_t p = a.p();
    DilateScan scan;
    scan.per_d.assign(p, 0);
    DilateSupScanner scanner(a.modulus());
    for (std::uint32_t d = 1; d <= (p - 1) / 2; ++d) {
        std::uint32_t g = scanner.gap_of_dilate(a.elements(), d);
        scan.per_d[d] = g;
        scan.per_d[p - d] = g;
    }
    scan.sup = 0;
    scan.argmax_d = 1;
    for (std::uint32_t d = 1; d < p; ++d) {
        if (scan.per_d[d] > scan.sup) {
            scan.sup = scan.per_d[d];
            scan.argmax_d = d;
        }
    }
    scan.l_value = Rational(std::int64_t(a.size()) * scan.sup, p);
    return scan;
}

Rational pigeonhole_bound(PrimeModulus p, std::uint64_t n) {
    if (n < 1 || n > p.value()) throw std::domain_error("cardinality must be in [1, p]");
    return Rational(std::int64_t(p.value()) - std::int64_t(n), std::int64_t(n));
}

Rational theorem_bound(PrimeModulus p, std::uint64_t n) {
    if (n < 2) throw std::domain_error("bound requires |A| > 1");
    if (n > p.value()) throw std::domain_error("cardinality must be in [2, p]");
    return Rational(2 * (std::int64_t(p.value()) - std::int64_t(n)), std::int64_t(n));
}

std::int64_t theorem_bound_int(PrimeModulus p, std::uint64_t n) {
    return theorem_bound(p, n).ceil();
}

std::uint32_t min_covering_arc(const ResidueSet& a) {
    auto elems = a.elements();
    std::uint32_t p = a.p();
    std::uint32_t max_diff = elems.front() + p - elems.back();
    for (std::size_t i = 1; i < elems.size(); ++i)
        max_diff = std::max(max_diff, elems[i] - elems[i - 1]);
    return p - max_diff + 1;
}

bool check_covering(const ResidueSet& a, std::uint32_t m) {
    std::uint32_t p = a.p();
    if (m < 1 || m >= p) throw std::domain_error("covering height must satisfy 1 <= m < p");
    DilateSupScanner scanner(a.modulus());
    for (std::uint32_t d = 1; d < p; ++d) {
        if (scanner.gap_of_dilate(a.elements(), d) >= m) return false;
    }
    return true;
}

}  // namespace dgap
