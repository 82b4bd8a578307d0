// AVX2 variant of the cyclic zero-run scan. Compiled with -mavx2 and only
// ever called after a runtime cpuid check.

#include <immintrin.h>

#include "dgap/kernels.hpp"
#include "kernels_detail.hpp"

namespace dgap::kernels {

std::uint32_t longest_zero_run_avx2(const std::uint64_t* words, std::uint32_t nbits) noexcept {
    if (nbits == 0) return 0;
    detail::RunState st;
    std::uint32_t full_words = nbits / 64;
    std::uint32_t wi = 0;
    // Membership arrays are sparse for the interesting inputs; testz lets
    // us swallow empty 256-bit blocks without touching per-bit state.
    while (wi + 4 <= full_words) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + wi));
        if (_mm256_testz_si256(v, v)) {
            st.cur += 256;
            wi += 4;
            continue;
        }
        for (int j = 0; j < 4; ++j, ++wi) detail::step_word(words[wi], 64, st);
    }
    for (; wi < full_words; ++wi) detail::step_word(words[wi], 64, st);
    std::uint32_t tail = nbits & 63;
    if (tail) detail::step_word(words[full_words] & ((std::uint64_t(1) << tail) - 1), tail, st);
    return detail::finish(st, nbits);
}

}  // namespace dgap::kernels
