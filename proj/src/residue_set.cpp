#include "dgap/residue_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dgap {

ResidueSet::ResidueSet(PrimeModulus modulus, std::vector<std::uint32_t> elements)
    : modulus_(modulus), elements_(std::move(elements)), bits_(modulus.value()) {
    if (elements_.empty()) throw std::domain_error("empty set: gap undefined for empty set");
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] >= p())
            throw std::domain_error("set element " + std::to_string(elements_[i]) +
                                    " out of range [0, " + std::to_string(p()) + ")");
        if (i > 0 && elements_[i] == elements_[i - 1])
            throw std::domain_error("duplicate set element " + std::to_string(elements_[i]));
        bits_.set(elements_[i]);
    }
}

ResidueSet ResidueSet::full(PrimeModulus modulus) {
    std::vector<std::uint32_t> all(modulus.value());
    for (std::uint32_t i = 0; i < modulus.value(); ++i) all[i] = i;
    return ResidueSet(modulus, std::move(all));
}

ResidueSet affine_image(const ResidueSet& a, std::uint64_t u, std::uint64_t t) {
    std::uint32_t p = a.p();
    std::uint32_t ur = std::uint32_t(u % p);
    std::uint32_t tr = std::uint32_t(t % p);
    if (ur == 0) throw std::domain_error("dilation by zero");
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    for (std::uint32_t x : a.elements()) out.push_back(add_mod(mul_mod(ur, x, p), tr, p));
    return ResidueSet(a.modulus(), std::move(out));
}

ResidueSet dilate(const ResidueSet& a, std::uint64_t d) { return affine_image(a, d, 0); }

ResidueSet translate(const ResidueSet& a, std::uint64_t t) { return affine_image(a, 1, t); }

}  // namespace dgap
