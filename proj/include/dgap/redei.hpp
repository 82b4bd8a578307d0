#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dgap/poly.hpp"
#include "dgap/residue_set.hpp"

namespace dgap {

// f may not exceed this many coefficients; certify and build_f fail with
// resource_error beyond it. Keeps schoolbook arithmetic at desk scale.
inline constexpr std::uint64_t kCertifyDegreeCap = 2'000'000;

enum class CertBranch {
    first_branch,   // Wronskian nonzero, divisibility forces p <= k + |A|
    second_branch,  // Wronskian identically zero; never expected on a
                    // genuine instance with k < p (flagged anomalous)
    k_ge_p,         // k >= p, polynomial checks unnecessary
};

const char* branch_name(CertBranch b) noexcept;

// Replay of the polynomial-method proof on one concrete set: the covering
// property at height m = sup+1, the split f = t^p g + h, the degree bound
// on h, the Wronskian divisibility, and the final counting inequality.
struct CertificateReport {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> set;

    std::uint32_t m = 0;   // sup_d g(d*A) + 1
    std::int64_t k = 0;    // |A|*m - p + 1
    bool covering_ok = false;

    CertBranch branch = CertBranch::k_ge_p;
    std::optional<std::int64_t> deg_g;
    std::optional<std::int64_t> deg_h;
    std::optional<bool> degree_bound_ok;     // deg h <= k, only when k < p
    std::optional<bool> wronskian_zero;      // only when k < p
    std::optional<bool> divisibility_ok;     // first branch: (t+a)^(m-1) | W for all a
    std::optional<bool> first_inequality_ok; // first branch: (m-1)|A| <= 2k-1 and p <= k+|A|
    std::optional<std::uint32_t> proportionality_c;  // second branch: h = c*g

    bool final_inequality_ok = false;        // |A|*m >= 2p - |A| - 1
    bool sup_meets_theorem_bound = false;    // sup >= ceil(2p/|A| - 2)
    bool anomalous = false;                  // second branch observed, or an
                                             // internal consistency check failed

    // Coefficients of the split parts, recorded for fixture-sized
    // instances only (deg f <= 64).
    std::optional<std::vector<std::uint32_t>> g_coeffs;
    std::optional<std::vector<std::uint32_t>> h_coeffs;

    friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

// The monic product prod_{a in A} (t + a)^m, degree exactly |A|*m.
// Throws resource_error when |A|*m exceeds kCertifyDegreeCap.
Poly build_f(const ResidueSet& a, std::uint32_t m);

// Unique split f = t^p * g + h with deg h < p.
std::pair<Poly, Poly> split_tp(const Poly& f);

// h'g - hg'.
Poly wronskian(const Poly& g, const Poly& h);

// c with h = c*g coefficientwise (c = 0 when h = 0), or nullopt when h is
// not proportional to g. Throws std::domain_error when g = 0.
std::optional<std::uint32_t> check_proportional(const Poly& g, const Poly& h);

// Full pipeline; requires 2 <= |A| < p.
CertificateReport certify(const ResidueSet& a);

}  // namespace dgap
