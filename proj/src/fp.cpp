#include "dgap/fp.hpp"

#include <stdexcept>
#include <string>

namespace dgap {

namespace {

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t pow_mod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod64(r, base, m);
        base = mul_mod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// One Miller-Rabin round: n - 1 = d * 2^s with d odd.
bool witness_passes(std::uint64_t a, std::uint64_t n, std::uint64_t d, int s) noexcept {
    std::uint64_t x = pow_mod64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for every n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!witness_passes(a, n, d, s)) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    if (p == 2) throw std::domain_error("modulus must be an odd prime greater than 2");
    if (p >= (std::uint64_t(1) << 31))
        throw std::domain_error("modulus must be below 2^31 so products fit in 64 bits");
    p_ = std::uint32_t(p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) noexcept {
    std::uint64_t r = 1 % p;
    std::uint64_t b = base % p;
    while (exp) {
        if (exp & 1) r = r * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return std::uint32_t(r);
}

std::uint32_t inv_mod(std::uint64_t a, PrimeModulus p) {
    std::uint32_t r = std::uint32_t(a % p.value());
    if (r == 0) throw std::domain_error("no inverse of zero");
    return pow_mod(r, p.value() - 2, p.value());
}

}  // namespace dgap
