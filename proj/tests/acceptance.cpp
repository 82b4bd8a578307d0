// Acceptance suite: every exit criterion of the project, one pass/fail line
// each. Exhaustive where the claim is exhaustive, seeded where randomized.
// Run as: acceptance <path-to-dgap-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dgap/gaps.hpp"
#include "dgap/kernels.hpp"
#include "dgap/records.hpp"
#include "dgap/redei.hpp"
#include "dgap/search.hpp"
#include "test_util.hpp"

using namespace dgap;
using namespace dgap::testing;

namespace {

std::string g_cli_path;

struct Failure {
    std::string detail;
};

#define ACCEPT(cond, msg)                                    \
    do {                                                     \
        if (!(cond)) {                                       \
            std::ostringstream os_;                          \
            os_ << msg;                                      \
            throw Failure{os_.str()};                        \
        }                                                    \
    } while (0)

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    ACCEPT(pipe != nullptr, "cannot spawn CLI");
    CliResult result;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// ---- criterion 1: Theorem, exhaustive over all subsets for p <= 17 ----

double criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    for (std::uint32_t pv : odd_primes_up_to(17)) {
        PrimeModulus p(pv);
        DilateSupScanner scanner(p);
        for (std::uint32_t mask = 1; mask < (1u << pv); ++mask) {
            auto elements = mask_elements(mask);
            std::uint32_t n = std::uint32_t(elements.size());
            if (n < 2 || n > pv - 1) continue;
            auto [sup, argmax] = scanner.sup_argmax(elements);
            (void)argmax;
            // sup >= 2p/n - 2 exactly: n*sup >= 2(p - n)
            ACCEPT(std::int64_t(n) * sup >= 2 * (std::int64_t(pv) - n),
                   "violated at p=" << pv << " mask=" << mask << " sup=" << sup);
            ++checked;
        }
    }
    ACCEPT(checked == (1u << 3) - 2 - 3 + (1u << 5) - 2 - 5 + (1u << 7) - 2 - 7 +
                          (1u << 11) - 2 - 11 + (1u << 13) - 2 - 13 + (1u << 17) - 2 - 17,
           "unexpected subset count " << checked);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ACCEPT(secs < 60.0, "exceeded 60s budget: " << secs);
    return secs;
}

// ---- criterion 2: n = 2 family is tight for every prime <= 97 ----

double criterion2() {
    auto start = std::chrono::steady_clock::now();
    for (std::uint32_t pv : odd_primes_up_to(97)) {
        PrimeModulus p(pv);
        SearchRecord rec = enumerate_min_L(p, 2);
        Rational expected(2 * (std::int64_t(pv) - 2), pv);
        ACCEPT(rec.min_L == expected, "min_L mismatch at p=" << pv);
        ACCEPT(rec.min_L == rec.bound, "bound not attained at p=" << pv);
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 3: quadratic-residue fixture p=7, A={1,2,4} ----

double criterion3() {
    auto start = std::chrono::steady_clock::now();
    ResidueSet a(PrimeModulus(7), {1, 2, 4});
    DilateScan scan = dilate_scan(a);
    ACCEPT(scan.sup == 3, "sup = " << scan.sup);
    ACCEPT(scan.l_value == Rational(9, 7), "L mismatch");
    CertificateReport rep = certify(a);
    ACCEPT(rep.m == 4, "m = " << rep.m);
    ACCEPT(rep.k == 6, "k = " << rep.k);
    ACCEPT(rep.final_inequality_ok, "final inequality");  // 12 >= 10
    ACCEPT(std::int64_t(3) * rep.m >= 2 * 7 - 3 - 1, "12 >= 10 recheck");
    ACCEPT(!rep.anomalous, "anomalous");
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 4: certificate fixture p=5, A={0,1}, byte-exact ----

double criterion4() {
    auto start = std::chrono::steady_clock::now();
    PrimeModulus p5(5);
    CertificateReport rep = certify(ResidueSet(p5, {0, 1}));
    ACCEPT(rep.g_coeffs && *rep.g_coeffs == std::vector<std::uint32_t>({4, 1, 4, 1}),
           "g coefficients");
    ACCEPT(rep.h_coeffs && *rep.h_coeffs == std::vector<std::uint32_t>({0, 0, 0, 0, 1}),
           "h coefficients");
    Poly g(p5, *rep.g_coeffs), h(p5, *rep.h_coeffs);
    Poly w = wronskian(g, h);
    ACCEPT(w == Poly(p5, {0, 0, 0, 1, 3, 3, 1}), "wronskian coefficients");
    ACCEPT(w == pow(Poly(p5, {0, 1}), 3) * pow(Poly::linear(p5, 1), 3), "t^3 (t+1)^3 form");
    ACCEPT(divides_power(w, 0, 3), "t^3 divides");
    ACCEPT(divides_power(w, 1, 3), "(t+1)^3 divides");
    ACCEPT(rep.branch == CertBranch::first_branch, "branch");
    ACCEPT(rep.first_inequality_ok && *rep.first_inequality_ok, "5 <= 4 + 2");
    ACCEPT(rep.final_inequality_ok, "8 >= 7");
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 5: randomized degree bound + divisibility, 1000 instances ----

int g_second_branch_seen = 0;  // shared with criterion 8

double criterion5() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260809);
    auto primes = odd_primes_up_to(97);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t pv = primes[rng() % primes.size()];
        PrimeModulus p(pv);
        std::uint32_t n = 2 + std::uint32_t(rng() % (pv - 2));
        ResidueSet a(p, random_subset(rng, pv, n));

        std::uint32_t m = dilate_scan(a).sup + 1;
        std::int64_t k = std::int64_t(n) * m - pv + 1;
        CertificateReport rep = certify(a);
        ACCEPT(rep.m == m && rep.k == k, "m/k mismatch at trial " << trial);
        if (rep.branch == CertBranch::second_branch) ++g_second_branch_seen;
        if (k >= pv) continue;

        auto [g, h] = split_tp(build_f(a, m));
        ACCEPT(h.degree() <= k, "deg h > k at p=" << pv << " n=" << n << " trial " << trial);
        Poly w = wronskian(g, h);
        if (!w.is_zero()) {
            for (std::uint32_t elem : a.elements())
                ACCEPT(divides_power(w, elem, m - 1),
                       "divisibility fails at p=" << pv << " a=" << elem << " trial " << trial);
            ACCEPT(w.degree() <= 2 * k - 1, "deg W > 2k-1 at trial " << trial);
        }
        ACCEPT(rep.degree_bound_ok && *rep.degree_bound_ok, "report degree bound, trial " << trial);
        ACCEPT(!rep.anomalous, "anomalous certificate at trial " << trial);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ACCEPT(secs < 120.0, "exceeded 120s budget: " << secs);
    return secs;
}

// ---- criterion 6: kernel vs O(p^2) brute force, 1000 random sets ----

double criterion6() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(609);
    auto primes = odd_primes_up_to(199);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t pv = primes[rng() % primes.size()];
        std::uint32_t n = 1 + std::uint32_t(rng() % pv);
        ResidueSet a(PrimeModulus(pv), random_subset(rng, pv, n));
        std::uint32_t fast = largest_gap(a).gap;
        ACCEPT(fast == brute_force_gap(a),
               "scan disagrees with brute force at p=" << pv << " trial " << trial);
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 7: invariance suite ----

double criterion7() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(707);
    auto primes97 = odd_primes_up_to(97);

    // L and sup under 1000 random affine maps
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t pv = primes97[rng() % primes97.size()];
        PrimeModulus p(pv);
        std::uint32_t n = 2 + std::uint32_t(rng() % (pv - 1));
        ResidueSet a(p, random_subset(rng, pv, n));
        std::uint32_t u = 1 + std::uint32_t(rng() % (pv - 1));
        std::uint32_t t = std::uint32_t(rng() % pv);
        DilateScan s1 = dilate_scan(a);
        DilateScan s2 = dilate_scan(affine_image(a, u, t));
        ACCEPT(s1.sup == s2.sup && s1.l_value == s2.l_value,
               "affine invariance fails at trial " << trial);
    }

    // gap + arc duality on 1000 random sets
    auto primes199 = odd_primes_up_to(199);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t pv = primes199[rng() % primes199.size()];
        std::uint32_t n = 1 + std::uint32_t(rng() % pv);
        ResidueSet a(PrimeModulus(pv), random_subset(rng, pv, n));
        ACCEPT(largest_gap(a).gap + min_covering_arc(a) == pv,
               "duality fails at p=" << pv << " trial " << trial);
    }

    // reflection symmetry per_d[d] = per_d[p-d], exhaustive in d for p <= 31;
    // all subsets for the small primes, sampled subsets beyond
    for (std::uint32_t pv : odd_primes_up_to(31)) {
        PrimeModulus p(pv);
        std::vector<std::vector<std::uint32_t>> sets;
        if (pv <= 7) {
            for (std::uint32_t mask = 1; mask < (1u << pv); ++mask)
                sets.push_back(mask_elements(mask));
        } else {
            for (int trial = 0; trial < 60; ++trial)
                sets.push_back(random_subset(rng, pv, 1 + std::uint32_t(rng() % pv)));
        }
        for (const auto& elements : sets) {
            ResidueSet a(p, elements);
            DilateScan scan = dilate_scan(a);
            for (std::uint32_t d = 1; d < pv; ++d) {
                ACCEPT(scan.per_d[d] == scan.per_d[pv - d], "asymmetry at p=" << pv);
                ACCEPT(scan.per_d[d] == dilate_gap(a, d), "table mismatch at p=" << pv);
            }
        }
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 8: no SECOND_BRANCH with k < p anywhere ----

double criterion8() {
    auto start = std::chrono::steady_clock::now();
    ACCEPT(g_second_branch_seen == 0,
           "criterion 5 observed " << g_second_branch_seen << " second-branch certificates");
    // exhaustive certificates over every subset with 2 <= |A| <= p-1, p <= 17
    for (std::uint32_t pv : odd_primes_up_to(17)) {
        PrimeModulus p(pv);
        for (std::uint32_t mask = 1; mask < (1u << pv); ++mask) {
            auto elements = mask_elements(mask);
            std::uint32_t n = std::uint32_t(elements.size());
            if (n < 2 || n > pv - 1) continue;
            CertificateReport rep = certify(ResidueSet(p, std::move(elements)));
            ACCEPT(rep.branch != CertBranch::second_branch,
                   "second branch at p=" << pv << " mask=" << mask);
            ACCEPT(!rep.anomalous, "anomalous certificate at p=" << pv << " mask=" << mask);
        }
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 9: probe reproducibility through the CLI ----

double criterion9() {
    auto start = std::chrono::steady_clock::now();
    std::string args = "search --p 101 --n 10 --mode random --trials 10000 --seed 42";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    ACCEPT(first.exit_code == 0, "CLI exit " << first.exit_code);
    ACCEPT(!first.output.empty(), "no CLI output");
    ACCEPT(first.output == second.output, "outputs differ between runs");

    ResultRecord rec = parse_json(first.output);
    const auto& payload = std::get<SearchRecord>(rec.payload);
    ACCEPT(payload.min_L >= Rational(182, 101), "min_L below the guaranteed bound");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ACCEPT(secs < 30.0, "exceeded 30s budget: " << secs);
    return secs;
}

// ---- criterion 10: JSON round trips and sweep resumability ----

double criterion10() {
    auto start = std::chrono::steady_clock::now();
    PrimeModulus p5(5), p7(7), p101(101);
    ResidueSet qr(p7, {1, 2, 4});
    std::vector<ResultRecord> fixtures;
    fixtures.push_back(make_gap_record(largest_gap(qr), qr.elements()));
    fixtures.push_back(make_scan_record(to_scan_report(dilate_scan(qr), true), 7, qr.elements()));
    fixtures.push_back(make_scan_record(to_scan_report(dilate_scan(qr), false), 7, qr.elements()));
    fixtures.push_back(make_cert_record(certify(qr)));
    fixtures.push_back(make_cert_record(certify(ResidueSet(p5, {0, 1}))));
    fixtures.push_back(make_cert_record(certify(ResidueSet(p5, {0, 1, 2}))));
    fixtures.push_back(make_search_record(enumerate_min_L(p5, 2)));
    fixtures.push_back(make_search_record(enumerate_min_L(p7, 3)));
    fixtures.push_back(make_search_record(random_probe(p101, 10, 100, 42)));
    for (const auto& rec : fixtures) {
        std::string text = render_json(rec);
        ResultRecord parsed = parse_json(text);
        ACCEPT(parsed == rec, "parse(render(r)) != r for kind " << record_kind_name(rec.kind));
        ACCEPT(render_json(parsed) == text, "re-render differs for " << record_kind_name(rec.kind));
    }

    auto store_path = std::filesystem::temp_directory_path() / "dgap_acceptance_sweep.jsonl";
    std::filesystem::remove(store_path);
    std::string sweep_args =
        "sweep --primes 3..13 --sizes all --mode exhaustive --out " + store_path.string();
    CliResult first = run_cli(sweep_args);
    ACCEPT(first.exit_code == 0, "sweep exit " << first.exit_code);
    auto size_first = std::filesystem::file_size(store_path);
    CliResult second = run_cli(sweep_args);
    ACCEPT(second.exit_code == 0, "sweep rerun exit " << second.exit_code);
    ACCEPT(std::filesystem::file_size(store_path) == size_first, "sweep rerun appended records");
    ACCEPT(second.output.find("0 appended") != std::string::npos, "rerun reported appends");
    std::filesystem::remove(store_path);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    if (g_cli_path.empty()) {
        const char* env = std::getenv("DGAP_CLI");
        if (env) g_cli_path = env;
    }
    if (g_cli_path.empty()) {
        std::cerr << "usage: acceptance <path-to-dgap-cli>\n";
        return 2;
    }

    struct Criterion {
        int id;
        const char* label;
        std::function<double()> fn;
    };
    std::vector<Criterion> criteria = {
        {1, "exhaustive bound sup >= 2(p/n - 1), all subsets, p <= 17", criterion1},
        {2, "n = 2 family attains the bound exactly for every prime <= 97", criterion2},
        {3, "fixture p=7 A={1,2,4}: sup 3, L = 9/7, m=4, k=6, 12 >= 10", criterion3},
        {4, "fixture p=5 A={0,1}: byte-exact g, h, Wronskian and divisibility", criterion4},
        {5, "1000 random instances: deg h <= k, Wronskian divisibility", criterion5},
        {6, "kernel scan equals O(p^2) brute force on 1000 random sets", criterion6},
        {7, "invariance: affine maps, gap+arc duality, per-d reflection", criterion7},
        {8, "no SECOND_BRANCH certificate with k < p anywhere", criterion8},
        {9, "probe p=101 n=10 trials=10^4 seed=42: identical bytes, min_L >= 182/101",
         criterion9},
        {10, "JSON round trips losslessly; sweep rerun appends nothing", criterion10},
    };

    int failures = 0;
    for (auto& c : criteria) {
        try {
            double secs = c.fn();
            std::printf("[PASS] criterion %2d: %s (%.2fs)\n", c.id, c.label, secs);
        } catch (const Failure& f) {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s -- %s\n", c.id, c.label, f.detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s -- exception: %s\n", c.id, c.label, e.what());
        }
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
