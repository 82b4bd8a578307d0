#include "dgap/redei.hpp"

#include <stdexcept>
#include <string>

#include "dgap/errors.hpp"
#include "dgap/gaps.hpp"

namespace dgap {

const char* branch_name(CertBranch b) noexcept {
    switch (b) {
        case CertBranch::first_branch: return "FIRST_BRANCH";
        case CertBranch::second_branch: return "SECOND_BRANCH";
        case CertBranch::k_ge_p: return "K_GE_P";
    }
    return "?";
}

Poly build_f(const ResidueSet& a, std::uint32_t m) {
    if (m < 1) throw std::domain_error("exponent m must be positive");
    std::uint64_t deg = std::uint64_t(a.size()) * m;
    if (deg > kCertifyDegreeCap)
        throw resource_error("degree cap " + std::to_string(kCertifyDegreeCap) +
                             " exceeded: |A|*m = " + std::to_string(deg));
    Poly base = Poly::one(a.modulus());
    for (std::uint32_t elem : a.elements()) base = base * Poly::linear(a.modulus(), elem);
    return pow(base, m);
}

std::pair<Poly, Poly> split_tp(const Poly& f) {
    std::uint32_t p = f.p();
    auto c = f.coeffs();
    if (c.size() <= p) return {Poly::zero(f.modulus()), f};
    std::vector<std::uint32_t> low(c.begin(), c.begin() + p);
    std::vector<std::uint32_t> high(c.begin() + p, c.end());
    return {Poly(f.modulus(), std::move(high)), Poly(f.modulus(), std::move(low))};
}

Poly wronskian(const Poly& g, const Poly& h) {
    return derivative(h) * g - h * derivative(g);
}

std::optional<std::uint32_t> check_proportional(const Poly& g, const Poly& h) {
    if (g.is_zero()) throw std::domain_error("proportionality against the zero polynomial");
    if (h.is_zero()) return 0;
    if (h.degree() != g.degree()) return std::nullopt;
    std::uint32_t p = g.p();
    std::uint32_t c = mul_mod(h.leading(), inv_mod(g.leading(), g.modulus()), p);
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
        if (h.coeff(i) != mul_mod(c, g.coeff(i), p)) return std::nullopt;
    }
    return c;
}

CertificateReport certify(const ResidueSet& a) {
    std::uint32_t p = a.p();
    std::uint32_t n = a.size();
    if (n < 2) throw std::domain_error("certificate requires |A| > 1");
    if (n >= p) throw std::domain_error("certificate requires |A| < p");

    CertificateReport rep;
    rep.p = p;
    rep.set.assign(a.elements().begin(), a.elements().end());

    DilateScan scan = dilate_scan(a);
    rep.m = scan.sup + 1;
    if (rep.m >= p) {
        // sup <= p - n <= p - 2 whenever n >= 2, so this cannot happen.
        rep.anomalous = true;
        return rep;
    }
    rep.covering_ok = check_covering(a, rep.m);
    if (!rep.covering_ok) rep.anomalous = true;

    rep.k = std::int64_t(n) * rep.m - p + 1;

    if (rep.k < p) {
        Poly f = build_f(a, rep.m);
        auto [g, h] = split_tp(f);
        rep.deg_g = g.degree();
        rep.deg_h = h.degree();
        rep.degree_bound_ok = h.degree() <= rep.k;
        if (g.degree() > rep.k) rep.anomalous = true;  // deg g = k - 1 on a genuine instance

        Poly w = wronskian(g, h);
        rep.wronskian_zero = w.is_zero();
        if (w.is_zero()) {
            rep.branch = CertBranch::second_branch;
            rep.proportionality_c = check_proportional(g, h);
            // The proof derives a contradiction from this branch when
            // k < p; reaching it means the instance or the implementation
            // is broken, so flag it rather than trust it.
            rep.anomalous = true;
        } else {
            rep.branch = CertBranch::first_branch;
            bool div_ok = true;
            for (std::uint32_t elem : a.elements()) {
                if (!divides_power(w, elem, rep.m - 1)) {
                    div_ok = false;
                    break;
                }
            }
            rep.divisibility_ok = div_ok;
            rep.first_inequality_ok = std::int64_t(rep.m - 1) * n <= 2 * rep.k - 1 &&
                                      std::int64_t(p) <= rep.k + n;
            if (!div_ok || !*rep.first_inequality_ok) rep.anomalous = true;
        }

        if (std::uint64_t(n) * rep.m <= 64) {
            rep.g_coeffs.emplace(g.coeffs().begin(), g.coeffs().end());
            rep.h_coeffs.emplace(h.coeffs().begin(), h.coeffs().end());
        }
    } else {
        rep.branch = CertBranch::k_ge_p;
    }

    rep.final_inequality_ok = std::int64_t(n) * rep.m >= 2 * std::int64_t(p) - n - 1;
    rep.sup_meets_theorem_bound = std::int64_t(scan.sup) >= theorem_bound_int(a.modulus(), n);
    if (!rep.final_inequality_ok || !rep.sup_meets_theorem_bound) rep.anomalous = true;
    if (rep.degree_bound_ok && !*rep.degree_bound_ok) rep.anomalous = true;

    return rep;
}

}  // namespace dgap
