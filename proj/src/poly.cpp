#include "dgap/poly.hpp"

#include <stdexcept>

namespace dgap {

namespace {

void normalize(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_modulus(const Poly& a, const Poly& b) {
    if (!(a.modulus() == b.modulus())) throw std::invalid_argument("polynomial modulus mismatch");
}

}  // namespace

Poly::Poly(PrimeModulus modulus, std::vector<std::uint32_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p();
    normalize(coeffs_);
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    std::uint32_t p = a.p();
    std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a.coeff(i), b.coeff(i), p);
    return Poly(a.modulus(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    std::uint32_t p = a.p();
    std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coeff(i), b.coeff(i), p);
    return Poly(a.modulus(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.modulus());
    std::uint32_t p = a.p();
    // Schoolbook with 128-bit column accumulators: coefficients are < 2^31,
    // so one reduction per output coefficient suffices.
    std::vector<unsigned __int128> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        std::uint64_t ai = a.coeffs_[i];
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] += ai * b.coeffs_[j];
    }
    std::vector<std::uint32_t> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = std::uint32_t(acc[i] % p);
    return Poly(a.modulus(), std::move(out));
}

Poly pow(const Poly& x, std::uint64_t e) {
    Poly result = Poly::one(x.modulus());
    Poly base = x;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly derivative(const Poly& x) {
    if (x.degree() < 1) return Poly::zero(x.modulus());
    std::uint32_t p = x.p();
    auto c = x.coeffs();
    std::vector<std::uint32_t> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = mul_mod(std::uint32_t(i % p), c[i], p);
    return Poly(x.modulus(), std::move(out));
}

std::uint32_t eval(const Poly& x, std::uint32_t t) noexcept {
    std::uint32_t p = x.p();
    std::uint32_t acc = 0;
    auto c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = add_mod(mul_mod(acc, t % p, p), c[i], p);
    return acc;
}

bool divides_power(const Poly& x, std::uint32_t a, std::uint64_t e) {
    if (x.is_zero() || e == 0) return true;
    std::uint32_t p = x.p();
    std::uint32_t root = (p - a % p) % p;  // (t + a) vanishes at t = -a
    std::vector<std::uint32_t> c(x.coeffs().begin(), x.coeffs().end());
    for (std::uint64_t round = 0; round < e; ++round) {
        if (c.size() < 2) return false;  // nonzero constant is not divisible
        // Synthetic division by (t - root): Horner top-down; the running
        // value at the end is the remainder, the prefix is the quotient.
        std::uint32_t carry = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            std::uint32_t v = add_mod(mul_mod(carry, root, p), c[i], p);
            carry = v;
            c[i] = v;
        }
        if (c[0] != 0) return false;
        c.erase(c.begin());  // quotient coefficients, degree drops by one
    }
    return true;
}

}  // namespace dgap
