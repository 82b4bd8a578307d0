#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace dgap {

// Exact rational number, always reduced, denominator positive.
// All bound comparisons in this project are exact; no floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        std::int64_t g = std::gcd(n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    static Rational from_int(std::int64_t n) { return Rational(n, 1); }

    // Smallest integer >= this value.
    std::int64_t ceil() const noexcept {
        std::int64_t q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Rational& a, const Rational& b) noexcept {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }
};

}  // namespace dgap
