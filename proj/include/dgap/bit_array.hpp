#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace dgap {

// Fixed-length bit array backed by 64-bit words, LSB-first within a word.
// Padding bits above size() are kept zero.
class BitArray {
public:
    explicit BitArray(std::uint32_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::uint32_t size() const noexcept { return nbits_; }

    void set(std::uint32_t i) noexcept { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::uint32_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::uint32_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    std::uint32_t popcount() const noexcept {
        std::uint32_t c = 0;
        for (std::uint64_t w : words_) c += std::uint32_t(std::popcount(w));
        return c;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::uint32_t nbits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace dgap
