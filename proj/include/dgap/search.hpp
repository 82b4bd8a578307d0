#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dgap/rational.hpp"
#include "dgap/residue_set.hpp"

namespace dgap {

class ResultStore;  // defined with the record machinery

// xorshift64* (Marsaglia/Vigna): fixed-width integer recurrence so seeds
// reproduce identically on every platform. A zero seed is remapped to a
// fixed odd constant because the all-zero state is a fixed point.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) noexcept
        : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

enum class SearchMode { exhaustive, random };

const char* search_mode_name(SearchMode m) noexcept;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::size_t kExtremalSetCap = 16;

// Minimum of L(A) over n-subsets of F_p, either exact (EXHAUSTIVE) or
// sampled (RANDOM), with the extremal sets found in canonical form.
struct SearchRecord {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    SearchMode mode = SearchMode::exhaustive;
    Rational min_L;
    std::vector<std::vector<std::uint32_t>> extremal_sets;
    bool extremal_truncated = false;
    Rational bound;  // 2(1 - n/p)
    bool tight = false;  // min sup equals the least integer allowed by the bound
    std::optional<std::uint64_t> trials;  // RANDOM only
    std::optional<std::uint64_t> seed;    // RANDOM only

    // min_L = (n/p) * min_sup with min_sup integral.
    std::int64_t min_sup() const noexcept {
        return std::int64_t((__int128)min_L.num * p / ((__int128)min_L.den * n));
    }

    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

// Lexicographically smallest element list among all affine images u*A + t,
// u nonzero. Idempotent and constant on affine orbits. Requires |A| >= 2.
ResidueSet canonicalize(const ResidueSet& a);

// Exact minimum over all n-subsets, enumerated through representatives
// containing {0, 1} (every affine orbit has one). Throws resource_error
// when C(p-2, n-2) exceeds cap.
SearchRecord enumerate_min_L(PrimeModulus p, std::uint32_t n,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Minimum over `trials` uniformly random n-subsets from the seeded stream.
SearchRecord random_probe(PrimeModulus p, std::uint32_t n, std::uint64_t trials,
                          std::uint64_t seed);

struct AllSizes {};
struct SqrtSize {};
using SizesRule = std::variant<AllSizes, SqrtSize, std::vector<std::uint32_t>>;

struct SweepCell {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::optional<SearchRecord> record;
    std::string error;     // nonempty when the cell failed
    bool skipped = false;  // already present in the store
};

struct SweepOptions {
    std::uint32_t prime_lo = 0;
    std::uint32_t prime_hi = 0;
    SizesRule sizes = AllSizes{};
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    unsigned threads = 1;
};

// One cell per (p, n), ordered by (p, n). Cells already present in the
// store are skipped; freshly computed ones are appended to it. A failing
// cell records its error without aborting the sweep.
std::vector<SweepCell> sweep(const SweepOptions& options, ResultStore* store);

}  // namespace dgap
