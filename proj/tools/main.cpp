#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dgap/errors.hpp"
#include "dgap/gaps.hpp"
#include "dgap/records.hpp"
#include "dgap/redei.hpp"
#include "dgap/search.hpp"

namespace {

using namespace dgap;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitArgs = 2;
constexpr int kExitResource = 3;

std::vector<std::uint32_t> parse_set(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::domain_error("empty element in --set");
        std::size_t pos = 0;
        unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw std::domain_error("bad set element: " + item);
        out.push_back(std::uint32_t(v));
    }
    if (out.empty()) throw std::domain_error("--set must list at least one residue");
    return out;
}

SearchMode parse_mode(const std::string& text) {
    if (text == "exhaustive") return SearchMode::exhaustive;
    if (text == "random") return SearchMode::random;
    throw std::domain_error("mode must be 'exhaustive' or 'random'");
}

unsigned thread_count() {
    const char* env = std::getenv("DILATE_GAP_THREADS");
    if (env == nullptr) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1;
    }
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::domain_error("DILATE_GAP_THREADS must be a positive integer");
    return unsigned(v);
}

// Single-record output: JSON appends to the (deduplicated) store when --out
// is given, CSV overwrites as a plain export.
void emit(const ResultRecord& record, const std::string& format, const std::string& out_path) {
    if (format == "json") {
        if (out_path.empty()) {
            std::cout << render_json(record) << '\n';
        } else {
            ResultStore store(out_path);
            store.append(record);
        }
    } else if (format == "csv") {
        std::string text = render_csv(record);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
    } else {
        throw std::domain_error("format must be 'json' or 'csv'");
    }
}

struct CommonFlags {
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", flags.out_path, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Largest gaps in dilates of subsets of F_p: gap statistics, "
                 "dilate scans, polynomial-method certificates, and extremal search"};
    app.require_subcommand(1);

    std::uint64_t p_arg = 0;
    std::string set_arg;
    CommonFlags gap_flags, scan_flags, cert_flags, search_flags;

    auto* gap_cmd = app.add_subcommand("gap", "Largest gap of a set with its witness translate");
    gap_cmd->add_option("--p", p_arg, "Odd prime modulus")->required();
    gap_cmd->add_option("--set", set_arg, "Comma-separated residues")->required();
    add_common(gap_cmd, gap_flags);

    bool full_table = false;
    auto* scan_cmd = app.add_subcommand("scan", "Gap of every dilate d*A with sup and L(A)");
    scan_cmd->add_option("--p", p_arg, "Odd prime modulus")->required();
    scan_cmd->add_option("--set", set_arg, "Comma-separated residues")->required();
    scan_cmd->add_flag("--full", full_table, "Include the per-d gap table");
    add_common(scan_cmd, scan_flags);

    auto* cert_cmd = app.add_subcommand("certify", "Replay the polynomial-method certificate");
    cert_cmd->add_option("--p", p_arg, "Odd prime modulus")->required();
    cert_cmd->add_option("--set", set_arg, "Comma-separated residues")->required();
    add_common(cert_cmd, cert_flags);

    std::uint32_t n_arg = 0;
    std::string mode_arg = "exhaustive";
    std::uint64_t trials_arg = 1000;
    std::uint64_t seed_arg = 0;
    auto* search_cmd = app.add_subcommand("search", "Minimum of L(A) over n-subsets");
    search_cmd->add_option("--p", p_arg, "Odd prime modulus")->required();
    search_cmd->add_option("--n", n_arg, "Subset cardinality")->required();
    search_cmd->add_option("--mode", mode_arg, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--trials", trials_arg, "Random mode: number of sampled subsets");
    search_cmd->add_option("--seed", seed_arg, "Random mode: RNG seed");
    add_common(search_cmd, search_flags);

    std::string primes_arg, sizes_arg, sweep_out;
    std::string sweep_mode = "exhaustive";
    std::uint64_t sweep_trials = 1000;
    std::uint64_t sweep_seed = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Batch search over a (p, n) grid, resumable");
    sweep_cmd->add_option("--primes", primes_arg, "Prime range LO..HI")->required();
    sweep_cmd->add_option("--sizes", sizes_arg, "all | sqrt | N1,N2,...")->required();
    sweep_cmd->add_option("--mode", sweep_mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    sweep_cmd->add_option("--trials", sweep_trials, "Random mode: trials per cell");
    sweep_cmd->add_option("--seed", sweep_seed, "Random mode: RNG seed");
    sweep_cmd->add_option("--out", sweep_out, "Result store file (JSON lines)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    }

    try {
        if (gap_cmd->parsed()) {
            ResidueSet a(PrimeModulus(p_arg), parse_set(set_arg));
            GapReport report = largest_gap(a);
            emit(make_gap_record(report, a.elements()), gap_flags.format, gap_flags.out_path);
            return kExitOk;
        }
        if (scan_cmd->parsed()) {
            ResidueSet a(PrimeModulus(p_arg), parse_set(set_arg));
            ScanReport report = to_scan_report(dilate_scan(a), full_table);
            emit(make_scan_record(report, a.p(), a.elements()), scan_flags.format,
                 scan_flags.out_path);
            return kExitOk;
        }
        if (cert_cmd->parsed()) {
            ResidueSet a(PrimeModulus(p_arg), parse_set(set_arg));
            CertificateReport report = certify(a);
            emit(make_cert_record(report), cert_flags.format, cert_flags.out_path);
            if (report.anomalous) {
                std::cerr << "error: certificate invariant violated (branch "
                          << branch_name(report.branch) << ")\n";
                return kExitInternal;
            }
            return kExitOk;
        }
        if (search_cmd->parsed()) {
            PrimeModulus modulus(p_arg);
            SearchMode mode = parse_mode(mode_arg);
            SearchRecord record = mode == SearchMode::exhaustive
                                      ? enumerate_min_L(modulus, n_arg)
                                      : random_probe(modulus, n_arg, trials_arg, seed_arg);
            emit(make_search_record(record), search_flags.format, search_flags.out_path);
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            auto sep = primes_arg.find("..");
            if (sep == std::string::npos)
                throw std::domain_error("--primes must be a range LO..HI");
            SweepOptions options;
            options.prime_lo = std::uint32_t(std::stoull(primes_arg.substr(0, sep)));
            options.prime_hi = std::uint32_t(std::stoull(primes_arg.substr(sep + 2)));
            if (sizes_arg == "all")
                options.sizes = AllSizes{};
            else if (sizes_arg == "sqrt")
                options.sizes = SqrtSize{};
            else
                options.sizes = parse_set(sizes_arg);
            options.mode = parse_mode(sweep_mode);
            options.trials = sweep_trials;
            options.seed = sweep_seed;
            options.threads = thread_count();

            ResultStore store(sweep_out);
            auto cells = sweep(options, &store);
            std::size_t appended = 0, skipped = 0, failed = 0;
            for (const auto& cell : cells) {
                if (!cell.error.empty()) {
                    ++failed;
                    std::cerr << "cell p=" << cell.p << " n=" << cell.n << ": " << cell.error
                              << '\n';
                } else if (cell.skipped) {
                    ++skipped;
                } else {
                    ++appended;
                }
            }
            std::cout << "sweep: " << appended << " appended, " << skipped << " skipped, "
                      << failed << " failed, store " << sweep_out << '\n';
            return kExitOk;
        }
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitArgs;
}
