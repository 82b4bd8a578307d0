#include <doctest.h>

#include <random>
#include <vector>

#include "dgap/kernels.hpp"
#include "test_util.hpp"

using namespace dgap;
namespace k = dgap::kernels;

namespace {

// Per-bit oracle on an explicit bool vector, written independently of the
// kernels under test.
std::uint32_t cyclic_zero_run_oracle(const std::vector<bool>& bits) {
    std::uint32_t n = std::uint32_t(bits.size());
    std::uint32_t best = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        std::uint32_t len = 0;
        while (len < n && !bits[(s + len) % n]) ++len;
        if (len == n) return n;
        best = std::max(best, len);
    }
    return best;
}

BitArray to_bit_array(const std::vector<bool>& bits) {
    BitArray arr(std::uint32_t(bits.size()));
    for (std::uint32_t i = 0; i < bits.size(); ++i)
        if (bits[i]) arr.set(i);
    return arr;
}

std::vector<k::Variant> available_variants() {
    std::vector<k::Variant> out{k::Variant::reference, k::Variant::word};
    if (k::variant_available(k::Variant::avx2)) out.push_back(k::Variant::avx2);
    return out;
}

void check_all_variants(const std::vector<bool>& bits) {
    BitArray arr = to_bit_array(bits);
    std::uint32_t expected = cyclic_zero_run_oracle(bits);
    for (k::Variant v : available_variants()) {
        k::force_variant(v);
        CAPTURE(k::variant_name(v));
        CAPTURE(bits.size());
        CHECK(k::longest_zero_run_cyclic(arr) == expected);
    }
    k::reset_variant();
}

}  // namespace

TEST_CASE("kernel edge patterns") {
    check_all_variants({});
    check_all_variants({false});
    check_all_variants({true});
    check_all_variants(std::vector<bool>(64, false));
    check_all_variants(std::vector<bool>(64, true));
    check_all_variants(std::vector<bool>(257, false));

    // single set bit: the wraparound run has length n-1
    for (std::uint32_t n : {5u, 63u, 64u, 65u, 128u, 300u}) {
        for (std::uint32_t i : {0u, 1u, n - 1, n / 2}) {
            std::vector<bool> bits(n, false);
            bits[i] = true;
            check_all_variants(bits);
        }
    }

    // run crossing the word boundary and the cyclic boundary
    std::vector<bool> bits(130, true);
    for (int i = 60; i < 70; ++i) bits[i] = false;
    check_all_variants(bits);
    for (int i = 0; i < 5; ++i) bits[i] = false;
    for (int i = 125; i < 130; ++i) bits[i] = false;
    check_all_variants(bits);
}

TEST_CASE("kernel variants agree with the per-bit oracle on random arrays") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint32_t n = 1 + std::uint32_t(rng() % 500);
        double density = (trial % 4 == 0) ? 0.02 : 0.3;  // sparse and mixed fills
        std::vector<bool> bits(n);
        std::bernoulli_distribution coin(density);
        for (std::uint32_t i = 0; i < n; ++i) bits[i] = coin(rng);
        check_all_variants(bits);
    }
}

TEST_CASE("kernel variants agree on long sparse arrays") {
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 10; ++trial) {
        std::uint32_t n = 50'000 + std::uint32_t(rng() % 30'000);
        std::vector<bool> bits(n, false);
        for (int i = 0; i < 40; ++i) bits[rng() % n] = true;
        BitArray arr = to_bit_array(bits);
        std::uint32_t reference = k::longest_zero_run_reference(arr.words().data(), n);
        for (k::Variant v : available_variants()) {
            k::force_variant(v);
            CHECK(k::longest_zero_run_cyclic(arr) == reference);
        }
        k::reset_variant();
    }
}

TEST_CASE("dispatch reports an available variant and can be forced") {
    CHECK(k::variant_available(k::Variant::reference));
    CHECK(k::variant_available(k::Variant::word));
    k::force_variant(k::Variant::reference);
    CHECK(k::active_variant() == k::Variant::reference);
    k::reset_variant();
    CHECK(k::active_variant() != k::Variant::reference);
#if !defined(DGAP_HAVE_AVX2_BUILD)
    CHECK_THROWS_AS(k::force_variant(k::Variant::avx2), std::invalid_argument);
#endif
}
