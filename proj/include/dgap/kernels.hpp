#pragma once

#include <cstdint>

#include "dgap/bit_array.hpp"

namespace dgap::kernels {

// Length of the longest cyclic run of zero bits among positions [0, nbits)
// of an LSB-first word array. Returns nbits when every bit is zero and 0
// when every bit is one. This is the inner loop of every gap computation:
// with set membership in the bit array, the result is the largest gap.
//
// Three equivalent implementations: a bit-at-a-time reference, a 64-bit
// word kernel, and an AVX2 kernel that skips empty 256-bit blocks. The
// dispatched entry point picks the best variant supported by the CPU;
// tests force each variant and check they agree.

enum class Variant { reference, word, avx2 };

const char* variant_name(Variant v) noexcept;
bool variant_available(Variant v) noexcept;
Variant active_variant() noexcept;

// Force a specific variant (throws std::invalid_argument when unavailable).
// Intended for equivalence tests and benchmarking; not thread-safe against
// concurrent scans.
void force_variant(Variant v);
void reset_variant() noexcept;

std::uint32_t longest_zero_run_cyclic(const std::uint64_t* words, std::uint32_t nbits) noexcept;

inline std::uint32_t longest_zero_run_cyclic(const BitArray& bits) noexcept {
    return longest_zero_run_cyclic(bits.words().data(), bits.size());
}

std::uint32_t longest_zero_run_reference(const std::uint64_t* words, std::uint32_t nbits) noexcept;
std::uint32_t longest_zero_run_word(const std::uint64_t* words, std::uint32_t nbits) noexcept;
#if defined(DGAP_HAVE_AVX2_BUILD)
std::uint32_t longest_zero_run_avx2(const std::uint64_t* words, std::uint32_t nbits) noexcept;
#endif

}  // namespace dgap::kernels
