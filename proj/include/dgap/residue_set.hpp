#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dgap/bit_array.hpp"
#include "dgap/fp.hpp"

namespace dgap {

// A nonempty subset of F_p in dual representation: sorted element list plus
// a membership bit array of length p. Immutable after construction.
class ResidueSet {
public:
    // Accepts the elements in any order; sorts internally. Throws
    // std::domain_error on an empty list, an element outside [0, p), or a
    // duplicated element.
    ResidueSet(PrimeModulus modulus, std::vector<std::uint32_t> elements);

    static ResidueSet full(PrimeModulus modulus);

    PrimeModulus modulus() const noexcept { return modulus_; }
    std::uint32_t p() const noexcept { return modulus_.value(); }
    std::span<const std::uint32_t> elements() const noexcept { return elements_; }
    const BitArray& bits() const noexcept { return bits_; }
    std::uint32_t size() const noexcept { return std::uint32_t(elements_.size()); }
    bool contains(std::uint32_t r) const noexcept { return bits_.test(r); }

    friend bool operator==(const ResidueSet& a, const ResidueSet& b) noexcept {
        return a.p() == b.p() && a.elements_ == b.elements_;
    }

private:
    PrimeModulus modulus_;
    std::vector<std::uint32_t> elements_;
    BitArray bits_;
};

// Image {d*a mod p : a in A}; throws std::domain_error when d = 0 mod p.
ResidueSet dilate(const ResidueSet& a, std::uint64_t d);

// Image {a + t mod p : a in A}.
ResidueSet translate(const ResidueSet& a, std::uint64_t t);

// Image {u*a + t mod p : a in A}; u must be nonzero mod p.
ResidueSet affine_image(const ResidueSet& a, std::uint64_t u, std::uint64_t t);

}  // namespace dgap
