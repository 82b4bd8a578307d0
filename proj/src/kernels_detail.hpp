#pragma once

#include <bit>
#include <cstdint>

namespace dgap::kernels::detail {

// Shared scan state. `cur` is the zero run currently open, `lead` the run
// before the very first set bit (needed to join the cyclic wraparound),
// `best` the longest run closed so far.
struct RunState {
    std::uint64_t best = 0;
    std::uint64_t cur = 0;
    std::uint64_t lead = 0;
    bool seen_one = false;
};

// Consume one word holding `valid` meaningful low bits (1..64). Bits above
// `valid` must be zero; they are ignored.
inline void step_word(std::uint64_t w, std::uint32_t valid, RunState& st) noexcept {
    if (w == 0) {
        st.cur += valid;
        return;
    }
    std::uint32_t prev = 0;
    bool first_in_word = true;
    std::uint64_t ones = w;
    while (ones) {
        std::uint32_t pos = std::uint32_t(std::countr_zero(ones));
        std::uint64_t run = first_in_word ? st.cur + pos : std::uint64_t(pos - prev - 1);
        if (first_in_word && !st.seen_one) {
            st.lead = run;
            st.seen_one = true;
        }
        if (run > st.best) st.best = run;
        prev = pos;
        first_in_word = false;
        ones &= ones - 1;
    }
    st.cur = valid - 1 - prev;
}

// After the last word: join the trailing run with the leading one across
// the cyclic boundary. nbits is returned when no set bit was seen.
inline std::uint32_t finish(const RunState& st, std::uint32_t nbits) noexcept {
    if (!st.seen_one) return nbits;
    std::uint64_t wrap = st.cur + st.lead;
    return std::uint32_t(wrap > st.best ? wrap : st.best);
}

}  // namespace dgap::kernels::detail
