#include "dgap/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "dgap/errors.hpp"
#include "dgap/gaps.hpp"
#include "dgap/records.hpp"

namespace dgap {

const char* search_mode_name(SearchMode m) noexcept {
    return m == SearchMode::exhaustive ? "EXHAUSTIVE" : "RANDOM";
}

namespace {

// Tracks the minimum sup seen and the canonical extremal sets achieving it.
class ExtremalTracker {
public:
    explicit ExtremalTracker(PrimeModulus p) : modulus_(p) {}

    void offer(std::uint32_t sup, const std::vector<std::uint32_t>& elements) {
        if (best_sup_ && sup > *best_sup_) return;
        if (!best_sup_ || sup < *best_sup_) {
            best_sup_ = sup;
            sets_.clear();
            truncated_ = false;
        }
        ResidueSet canonical = canonicalize(ResidueSet(modulus_, elements));
        std::vector<std::uint32_t> canon(canonical.elements().begin(),
                                         canonical.elements().end());
        if (sets_.count(canon)) return;
        if (sets_.size() >= kExtremalSetCap) {
            truncated_ = true;
            return;
        }
        sets_.insert(std::move(canon));
    }

    std::uint32_t best_sup() const { return *best_sup_; }
    bool truncated() const { return truncated_; }
    std::vector<std::vector<std::uint32_t>> sets() const {
        return {sets_.begin(), sets_.end()};
    }

private:
    PrimeModulus modulus_;
    std::optional<std::uint32_t> best_sup_;
    std::set<std::vector<std::uint32_t>> sets_;
    bool truncated_ = false;
};

SearchRecord finish_record(PrimeModulus p, std::uint32_t n, SearchMode mode,
                           const ExtremalTracker& tracker) {
    SearchRecord rec;
    rec.p = p.value();
    rec.n = n;
    rec.mode = mode;
    rec.min_L = Rational(std::int64_t(n) * tracker.best_sup(), p.value());
    rec.extremal_sets = tracker.sets();
    rec.extremal_truncated = tracker.truncated();
    rec.bound = Rational(2 * (std::int64_t(p.value()) - n), p.value());
    rec.tight = std::int64_t(tracker.best_sup()) == theorem_bound_int(p, n);
    return rec;
}

void require_valid_n(PrimeModulus p, std::uint32_t n) {
    if (n < 2 || n > p.value() - 1)
        throw std::domain_error("cardinality must satisfy 2 <= n <= p - 1");
}

// C(a, b) clamped at cap + 1 to avoid overflow.
std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;  // exact: prefix products are binomials
        if (r > cap) return cap + 1;
    }
    return std::uint64_t(r);
}

}  // namespace

ResidueSet canonicalize(const ResidueSet& a) {
    if (a.size() < 2) throw std::domain_error("canonical form requires |A| >= 2");
    std::uint32_t p = a.p();
    // The lex-minimal affine image always contains 0 and 1, so it is the
    // image of a map sending some ordered pair of A to (0, 1); enumerating
    // pairs covers all candidates without walking all p(p-1) maps.
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> image(a.size());
    for (std::uint32_t x : a.elements()) {
        for (std::uint32_t y : a.elements()) {
            if (x == y) continue;
            std::uint32_t u = inv_mod(sub_mod(y, x, p), a.modulus());
            std::uint32_t t = (p - mul_mod(u, x, p)) % p;
            for (std::size_t i = 0; i < a.size(); ++i)
                image[i] = add_mod(mul_mod(u, a.elements()[i], p), t, p);
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best) best = image;
        }
    }
    return ResidueSet(a.modulus(), std::move(best));
}

SearchRecord enumerate_min_L(PrimeModulus p, std::uint32_t n, std::uint64_t cap) {
    require_valid_n(p, n);
    std::uint64_t reps = binomial_capped(p.value() - 2, n - 2, cap);
    if (reps > cap)
        throw resource_error("enumeration cap " + std::to_string(cap) +
                             " exceeded: C(p-2, n-2) is larger");

    // Representatives containing {0, 1}: every affine orbit has one, and L
    // is affine-invariant, so the minimum over them is the global minimum.
    DilateSupScanner scanner(p);
    ExtremalTracker tracker(p);
    std::vector<std::uint32_t> elements(n);
    elements[0] = 0;
    elements[1] = 1;
    std::vector<std::uint32_t> chosen(n - 2);
    for (std::uint32_t i = 0; i < n - 2; ++i) chosen[i] = 2 + i;
    while (true) {
        std::copy(chosen.begin(), chosen.end(), elements.begin() + 2);
        auto [sup, argmax] = scanner.sup_argmax(elements);
        (void)argmax;
        tracker.offer(sup, elements);
        // next combination of {2..p-1}
        std::size_t i = chosen.size();
        while (i > 0 && chosen[i - 1] == p.value() - (chosen.size() - (i - 1))) --i;
        if (i == 0) break;
        ++chosen[i - 1];
        for (std::size_t j = i; j < chosen.size(); ++j) chosen[j] = chosen[j - 1] + 1;
    }

    return finish_record(p, n, SearchMode::exhaustive, tracker);
}

SearchRecord random_probe(PrimeModulus p, std::uint32_t n, std::uint64_t trials,
                          std::uint64_t seed) {
    require_valid_n(p, n);
    if (trials < 1) throw std::domain_error("trials must be at least 1");

    Xorshift64Star rng(seed);
    DilateSupScanner scanner(p);
    ExtremalTracker tracker(p);
    BitArray used(p.value());
    std::vector<std::uint32_t> elements;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        elements.clear();
        while (elements.size() < n) {
            std::uint32_t r = std::uint32_t(rng.below(p.value()));
            if (used.test(r)) continue;
            used.set(r);
            elements.push_back(r);
        }
        auto [sup, argmax] = scanner.sup_argmax(elements);
        (void)argmax;
        tracker.offer(sup, elements);
        for (std::uint32_t r : elements) used.reset(r);
    }

    SearchRecord rec = finish_record(p, n, SearchMode::random, tracker);
    rec.trials = trials;
    rec.seed = seed;
    return rec;
}

namespace {

std::vector<std::uint32_t> sizes_for(PrimeModulus p, const SizesRule& rule) {
    if (std::holds_alternative<AllSizes>(rule)) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t n = 2; n + 1 <= p.value(); ++n) out.push_back(n);
        return out;
    }
    if (std::holds_alternative<SqrtSize>(rule)) {
        auto root = std::uint32_t(std::sqrt(double(p.value())));
        while ((root + 1) * std::uint64_t(root + 1) <= p.value()) ++root;
        while (root * std::uint64_t(root) > p.value()) --root;
        return {root};
    }
    return std::get<std::vector<std::uint32_t>>(rule);
}

SearchRecord compute_cell(const SweepOptions& options, PrimeModulus p, std::uint32_t n) {
    if (options.mode == SearchMode::exhaustive)
        return enumerate_min_L(p, n, options.enumeration_cap);
    return random_probe(p, n, options.trials, options.seed);
}

}  // namespace

std::vector<SweepCell> sweep(const SweepOptions& options, ResultStore* store) {
    std::vector<SweepCell> cells;
    for (std::uint64_t p = options.prime_lo; p <= options.prime_hi; ++p) {
        if (!is_prime(p)) continue;
        if (p == 2 || p >= (std::uint64_t(1) << 31)) {
            SweepCell cell;
            cell.p = std::uint32_t(p);
            cell.error = "unsupported modulus " + std::to_string(p);
            cells.push_back(std::move(cell));
            continue;
        }
        PrimeModulus modulus(p);
        for (std::uint32_t n : sizes_for(modulus, options.sizes)) {
            SweepCell cell;
            cell.p = std::uint32_t(p);
            cell.n = n;
            cells.push_back(std::move(cell));
        }
    }

    auto key_for = [&](const SweepCell& cell) {
        RecordKey k;
        k.p = cell.p;
        k.n = cell.n;
        k.mode = search_mode_name(options.mode);
        if (options.mode == SearchMode::random) k.seed = options.seed;
        return k;
    };

    // Mark cells already present; only the remainder is computed.
    for (auto& cell : cells) {
        if (!cell.error.empty() || store == nullptr) continue;
        if (const ResultRecord* existing = store->find(RecordKind::search, key_for(cell))) {
            cell.record = std::get<SearchRecord>(existing->payload);
            cell.skipped = true;
        }
    }

    auto compute = [&](SweepCell& cell) {
        if (cell.skipped || !cell.error.empty()) return;
        try {
            cell.record = compute_cell(options, PrimeModulus(cell.p), cell.n);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    };
    auto write = [&](const SweepCell& cell) {
        if (store != nullptr && !cell.skipped && cell.record)
            store->append(make_search_record(*cell.record));
    };

    unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || cells.size() <= 1) {
        for (auto& cell : cells) {
            compute(cell);
            write(cell);
        }
        return cells;
    }

    // Worker pool computes cells in any order; the calling thread is the
    // single writer and flushes them strictly in (p, n) order as they
    // complete, so an interrupted sweep leaves a resumable prefix.
    std::mutex mu;
    std::condition_variable cv;
    std::vector<char> done(cells.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            compute(cells[i]);
            {
                std::lock_guard<std::mutex> lock(mu);
                done[i] = 1;
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(threads, cells.size()); ++i)
        pool.emplace_back(worker);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return done[i] != 0; });
        }
        write(cells[i]);
    }
    for (auto& t : pool) t.join();
    return cells;
}

}  // namespace dgap
