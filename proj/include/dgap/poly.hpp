#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dgap/fp.hpp"

namespace dgap {

// Degree of the zero polynomial; compares below every genuine degree.
inline constexpr std::int64_t kNegInfDegree = std::numeric_limits<std::int64_t>::min();

// Dense univariate polynomial over F_p, little-endian coefficients
// (index = exponent), no trailing zero coefficient. Immutable value type.
class Poly {
public:
    Poly(PrimeModulus modulus, std::vector<std::uint32_t> coeffs);

    static Poly zero(PrimeModulus m) { return Poly(m, {}); }
    static Poly one(PrimeModulus m) { return Poly(m, {1}); }
    // t + a
    static Poly linear(PrimeModulus m, std::uint32_t a) { return Poly(m, {a % m.value(), 1}); }

    PrimeModulus modulus() const noexcept { return modulus_; }
    std::uint32_t p() const noexcept { return modulus_.value(); }
    std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t degree() const noexcept {
        return coeffs_.empty() ? kNegInfDegree : std::int64_t(coeffs_.size()) - 1;
    }
    std::uint32_t coeff(std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.p() == b.p() && a.coeffs_ == b.coeffs_;
    }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    PrimeModulus modulus_;
    std::vector<std::uint32_t> coeffs_;
};

Poly pow(const Poly& x, std::uint64_t e);

// Formal derivative; exponents reduce mod p, so d/dt t^p = 0.
Poly derivative(const Poly& x);

std::uint32_t eval(const Poly& x, std::uint32_t t) noexcept;

// True iff (t + a)^e divides x, by e rounds of synthetic division with
// zero remainder. The zero polynomial is divisible by everything.
bool divides_power(const Poly& x, std::uint32_t a, std::uint64_t e);

}  // namespace dgap
