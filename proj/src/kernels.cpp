#include "dgap/kernels.hpp"

#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

namespace dgap::kernels {

std::uint32_t longest_zero_run_reference(const std::uint64_t* words, std::uint32_t nbits) noexcept {
    // Bit-at-a-time scan; the semantic reference the other kernels are
    // tested against.
    std::uint64_t best = 0, cur = 0, lead = 0;
    bool seen_one = false;
    for (std::uint32_t i = 0; i < nbits; ++i) {
        bool bit = (words[i >> 6] >> (i & 63)) & 1;
        if (bit) {
            if (!seen_one) {
                lead = cur;
                seen_one = true;
            }
            if (cur > best) best = cur;
            cur = 0;
        } else {
            ++cur;
        }
    }
    if (!seen_one) return nbits;
    std::uint64_t wrap = cur + lead;
    return std::uint32_t(wrap > best ? wrap : best);
}

std::uint32_t longest_zero_run_word(const std::uint64_t* words, std::uint32_t nbits) noexcept {
    if (nbits == 0) return 0;
    detail::RunState st;
    std::uint32_t full_words = nbits / 64;
    for (std::uint32_t wi = 0; wi < full_words; ++wi) detail::step_word(words[wi], 64, st);
    std::uint32_t tail = nbits & 63;
    if (tail) detail::step_word(words[full_words] & ((std::uint64_t(1) << tail) - 1), tail, st);
    return detail::finish(st, nbits);
}

namespace {

using ScanFn = std::uint32_t (*)(const std::uint64_t*, std::uint32_t) noexcept;

bool cpu_has_avx2() noexcept {
#if defined(DGAP_HAVE_AVX2_BUILD) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

ScanFn fn_for(Variant v) noexcept {
    switch (v) {
        case Variant::reference: return &longest_zero_run_reference;
        case Variant::word: return &longest_zero_run_word;
        case Variant::avx2:
#if defined(DGAP_HAVE_AVX2_BUILD)
            return &longest_zero_run_avx2;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Variant best_variant() noexcept {
    return cpu_has_avx2() ? Variant::avx2 : Variant::word;
}

Variant g_variant = best_variant();
ScanFn g_fn = fn_for(g_variant);

}  // namespace

const char* variant_name(Variant v) noexcept {
    switch (v) {
        case Variant::reference: return "reference";
        case Variant::word: return "word";
        case Variant::avx2: return "avx2";
    }
    return "?";
}

bool variant_available(Variant v) noexcept {
    if (v == Variant::avx2) return cpu_has_avx2();
    return true;
}

Variant active_variant() noexcept { return g_variant; }

void force_variant(Variant v) {
    if (!variant_available(v))
        throw std::invalid_argument(std::string("kernel variant unavailable: ") + variant_name(v));
    g_variant = v;
    g_fn = fn_for(v);
}

void reset_variant() noexcept {
    g_variant = best_variant();
    g_fn = fn_for(g_variant);
}

std::uint32_t longest_zero_run_cyclic(const std::uint64_t* words, std::uint32_t nbits) noexcept {
    return g_fn(words, nbits);
}

}  // namespace dgap::kernels
