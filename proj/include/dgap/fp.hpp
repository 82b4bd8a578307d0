#pragma once

#include <cstdint>

namespace dgap {

// Deterministic primality test for any 64-bit input (Miller-Rabin with a
// fixed witness set that is exact for n < 2^64).
bool is_prime(std::uint64_t n);

// A verified odd prime p with 2 < p < 2^31, so that products of residues
// fit in unsigned 64-bit intermediates.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const noexcept { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p) - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) noexcept;

// Multiplicative inverse of a mod p, via Fermat: a^(p-2).
// Throws std::domain_error when a is divisible by p.
std::uint32_t inv_mod(std::uint64_t a, PrimeModulus p);

}  // namespace dgap
