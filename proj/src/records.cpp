#include "dgap/records.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dgap {

using json = nlohmann::ordered_json;

const char* record_kind_name(RecordKind k) noexcept {
    switch (k) {
        case RecordKind::gap: return "GAP";
        case RecordKind::scan: return "SCAN";
        case RecordKind::cert: return "CERT";
        case RecordKind::search: return "SEARCH";
    }
    return "?";
}

ScanReport to_scan_report(const DilateScan& scan, bool include_per_d) {
    ScanReport rep;
    if (include_per_d)
        rep.per_d.emplace(scan.per_d.begin() + 1, scan.per_d.end());
    rep.sup = scan.sup;
    rep.argmax_d = scan.argmax_d;
    rep.l_value = scan.l_value;
    return rep;
}

namespace {

RecordKind kind_from_name(const std::string& name) {
    if (name == "GAP") return RecordKind::gap;
    if (name == "SCAN") return RecordKind::scan;
    if (name == "CERT") return RecordKind::cert;
    if (name == "SEARCH") return RecordKind::search;
    throw std::invalid_argument("unknown record kind: " + name);
}

CertBranch branch_from_name(const std::string& name) {
    if (name == "FIRST_BRANCH") return CertBranch::first_branch;
    if (name == "SECOND_BRANCH") return CertBranch::second_branch;
    if (name == "K_GE_P") return CertBranch::k_ge_p;
    throw std::invalid_argument("unknown certificate branch: " + name);
}

SearchMode mode_from_name(const std::string& name) {
    if (name == "EXHAUSTIVE") return SearchMode::exhaustive;
    if (name == "RANDOM") return SearchMode::random;
    throw std::invalid_argument("unknown search mode: " + name);
}

json rational_to_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

Rational rational_from_json(const json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json key_to_json(const RecordKey& key) {
    json j;
    j["p"] = key.p;
    if (key.set) j["set"] = *key.set;
    if (key.n) j["n"] = *key.n;
    if (key.mode) j["mode"] = *key.mode;
    if (key.seed) j["seed"] = *key.seed;
    return j;
}

RecordKey key_from_json(const json& j) {
    RecordKey key;
    key.p = j.at("p").get<std::uint32_t>();
    if (j.contains("set")) key.set = j.at("set").get<std::vector<std::uint32_t>>();
    if (j.contains("n")) key.n = j.at("n").get<std::uint32_t>();
    if (j.contains("mode")) key.mode = j.at("mode").get<std::string>();
    if (j.contains("seed")) key.seed = j.at("seed").get<std::uint64_t>();
    return key;
}

json payload_to_json(const GapReport& r) {
    return json{{"gap", r.gap}, {"witness_t", r.witness_t}, {"p", r.p}};
}

json payload_to_json(const ScanReport& r) {
    json j;
    if (r.per_d) j["per_d"] = *r.per_d;
    j["sup"] = r.sup;
    j["argmax_d"] = r.argmax_d;
    j["l_value"] = rational_to_json(r.l_value);
    return j;
}

json payload_to_json(const CertificateReport& r) {
    json j;
    j["m"] = r.m;
    j["k"] = r.k;
    if (r.deg_g) j["deg_g"] = *r.deg_g;
    if (r.deg_h) j["deg_h"] = *r.deg_h;
    j["covering_ok"] = r.covering_ok;
    if (r.degree_bound_ok) j["degree_bound_ok"] = *r.degree_bound_ok;
    if (r.wronskian_zero) j["wronskian_zero"] = *r.wronskian_zero;
    if (r.divisibility_ok) j["divisibility_ok"] = *r.divisibility_ok;
    if (r.first_inequality_ok) j["first_inequality_ok"] = *r.first_inequality_ok;
    if (r.proportionality_c) j["proportionality_c"] = *r.proportionality_c;
    j["branch"] = branch_name(r.branch);
    j["final_inequality_ok"] = r.final_inequality_ok;
    j["sup_meets_theorem_bound"] = r.sup_meets_theorem_bound;
    j["anomalous"] = r.anomalous;
    if (r.g_coeffs) j["g_coeffs"] = *r.g_coeffs;
    if (r.h_coeffs) j["h_coeffs"] = *r.h_coeffs;
    return j;
}

json payload_to_json(const SearchRecord& r) {
    json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["mode"] = search_mode_name(r.mode);
    j["min_L"] = rational_to_json(r.min_L);
    j["extremal_sets"] = r.extremal_sets;
    j["extremal_truncated"] = r.extremal_truncated;
    j["bound"] = rational_to_json(r.bound);
    j["tight"] = r.tight;
    if (r.trials) j["trials"] = *r.trials;
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

GapReport gap_from_json(const json& j) {
    GapReport r;
    r.gap = j.at("gap").get<std::uint32_t>();
    r.witness_t = j.at("witness_t").get<std::uint32_t>();
    r.p = j.at("p").get<std::uint32_t>();
    return r;
}

ScanReport scan_from_json(const json& j) {
    ScanReport r;
    if (j.contains("per_d")) r.per_d = j.at("per_d").get<std::vector<std::uint32_t>>();
    r.sup = j.at("sup").get<std::uint32_t>();
    r.argmax_d = j.at("argmax_d").get<std::uint32_t>();
    r.l_value = rational_from_json(j.at("l_value"));
    return r;
}

CertificateReport cert_from_json(const json& j, const RecordKey& key) {
    CertificateReport r;
    r.p = key.p;
    if (key.set) r.set = *key.set;
    r.m = j.at("m").get<std::uint32_t>();
    r.k = j.at("k").get<std::int64_t>();
    if (j.contains("deg_g")) r.deg_g = j.at("deg_g").get<std::int64_t>();
    if (j.contains("deg_h")) r.deg_h = j.at("deg_h").get<std::int64_t>();
    r.covering_ok = j.at("covering_ok").get<bool>();
    if (j.contains("degree_bound_ok")) r.degree_bound_ok = j.at("degree_bound_ok").get<bool>();
    if (j.contains("wronskian_zero")) r.wronskian_zero = j.at("wronskian_zero").get<bool>();
    if (j.contains("divisibility_ok")) r.divisibility_ok = j.at("divisibility_ok").get<bool>();
    if (j.contains("first_inequality_ok"))
        r.first_inequality_ok = j.at("first_inequality_ok").get<bool>();
    if (j.contains("proportionality_c"))
        r.proportionality_c = j.at("proportionality_c").get<std::uint32_t>();
    r.branch = branch_from_name(j.at("branch").get<std::string>());
    r.final_inequality_ok = j.at("final_inequality_ok").get<bool>();
    r.sup_meets_theorem_bound = j.at("sup_meets_theorem_bound").get<bool>();
    r.anomalous = j.at("anomalous").get<bool>();
    if (j.contains("g_coeffs")) r.g_coeffs = j.at("g_coeffs").get<std::vector<std::uint32_t>>();
    if (j.contains("h_coeffs")) r.h_coeffs = j.at("h_coeffs").get<std::vector<std::uint32_t>>();
    return r;
}

SearchRecord search_from_json(const json& j) {
    SearchRecord r;
    r.p = j.at("p").get<std::uint32_t>();
    r.n = j.at("n").get<std::uint32_t>();
    r.mode = mode_from_name(j.at("mode").get<std::string>());
    r.min_L = rational_from_json(j.at("min_L"));
    r.extremal_sets = j.at("extremal_sets").get<std::vector<std::vector<std::uint32_t>>>();
    r.extremal_truncated = j.at("extremal_truncated").get<bool>();
    r.bound = rational_from_json(j.at("bound"));
    r.tight = j.at("tight").get<bool>();
    if (j.contains("trials")) r.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::string dedup_key(RecordKind kind, const RecordKey& key) {
    json j;
    j["kind"] = record_kind_name(kind);
    j["key"] = key_to_json(key);
    return j.dump();
}

std::string join_semicolon(std::span<const std::uint32_t> values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ';';
        out << values[i];
    }
    return out.str();
}

// CSV columns: p,n,set,sup_gap,argmax_d,L_num,L_den,bound_num,bound_den,tight
void csv_row(std::ostringstream& out, const ResultRecord& record) {
    switch (record.kind) {
        case RecordKind::gap: {
            const auto& r = std::get<GapReport>(record.payload);
            const auto& set = *record.key.set;
            out << r.p << ',' << set.size() << ',' << join_semicolon(set) << ',' << r.gap
                << ",,,,,,\n";
            return;
        }
        case RecordKind::scan: {
            const auto& r = std::get<ScanReport>(record.payload);
            const auto& set = *record.key.set;
            PrimeModulus p(record.key.p);
            std::uint32_t n = std::uint32_t(set.size());
            Rational bound(2 * (std::int64_t(p.value()) - n), p.value());
            bool tight = n >= 2 && std::int64_t(r.sup) == theorem_bound_int(p, n);
            out << p.value() << ',' << n << ',' << join_semicolon(set) << ',' << r.sup << ','
                << r.argmax_d << ',' << r.l_value.num << ',' << r.l_value.den << ','
                << bound.num << ',' << bound.den << ',' << (tight ? "true" : "false") << '\n';
            return;
        }
        case RecordKind::cert:
            throw std::invalid_argument("CERT records have no CSV form");
        case RecordKind::search: {
            const auto& r = std::get<SearchRecord>(record.payload);
            std::string set_col;
            std::uint32_t argmax = 0;
            if (!r.extremal_sets.empty()) {
                set_col = join_semicolon(r.extremal_sets.front());
                ResidueSet best(PrimeModulus(r.p), r.extremal_sets.front());
                argmax = dilate_scan(best).argmax_d;
            }
            out << r.p << ',' << r.n << ',' << set_col << ',' << r.min_sup() << ',' << argmax
                << ',' << r.min_L.num << ',' << r.min_L.den << ',' << r.bound.num << ','
                << r.bound.den << ',' << (r.tight ? "true" : "false") << '\n';
            return;
        }
    }
}

}  // namespace

ResultRecord make_gap_record(const GapReport& report, std::span<const std::uint32_t> set) {
    ResultRecord rec;
    rec.kind = RecordKind::gap;
    rec.key.p = report.p;
    rec.key.set.emplace(set.begin(), set.end());
    rec.payload = report;
    return rec;
}

ResultRecord make_scan_record(const ScanReport& report, std::uint32_t p,
                              std::span<const std::uint32_t> set) {
    ResultRecord rec;
    rec.kind = RecordKind::scan;
    rec.key.p = p;
    rec.key.set.emplace(set.begin(), set.end());
    rec.payload = report;
    return rec;
}

ResultRecord make_cert_record(const CertificateReport& report) {
    ResultRecord rec;
    rec.kind = RecordKind::cert;
    rec.key.p = report.p;
    rec.key.set = report.set;
    rec.payload = report;
    return rec;
}

ResultRecord make_search_record(const SearchRecord& record) {
    ResultRecord rec;
    rec.kind = RecordKind::search;
    rec.key.p = record.p;
    rec.key.n = record.n;
    rec.key.mode = search_mode_name(record.mode);
    if (record.mode == SearchMode::random) rec.key.seed = record.seed;
    rec.payload = record;
    return rec;
}

std::string render_json(const ResultRecord& record) {
    json j;
    j["kind"] = record_kind_name(record.kind);
    j["key"] = key_to_json(record.key);
    j["payload"] = std::visit([](const auto& payload) { return payload_to_json(payload); },
                              record.payload);
    j["schema_version"] = record.schema_version;
    return j.dump();
}

ResultRecord parse_json(const std::string& line) {
    json j = json::parse(line);
    ResultRecord rec;
    rec.kind = kind_from_name(j.at("kind").get<std::string>());
    rec.key = key_from_json(j.at("key"));
    rec.schema_version = j.at("schema_version").get<int>();
    const json& payload = j.at("payload");
    switch (rec.kind) {
        case RecordKind::gap: rec.payload = gap_from_json(payload); break;
        case RecordKind::scan: rec.payload = scan_from_json(payload); break;
        case RecordKind::cert: rec.payload = cert_from_json(payload, rec.key); break;
        case RecordKind::search: rec.payload = search_from_json(payload); break;
    }
    return rec;
}

std::string render_csv(std::span<const ResultRecord> records) {
    std::ostringstream out;
    out << "p,n,set,sup_gap,argmax_d,L_num,L_den,bound_num,bound_den,tight\n";
    for (const auto& rec : records) csv_row(out, rec);
    return out.str();
}

std::string render_csv(const ResultRecord& record) {
    return render_csv(std::span<const ResultRecord>(&record, 1));
}

ResultStore::ResultStore(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ResultRecord rec = parse_json(line);
        index_.emplace(dedup_key(rec.kind, rec.key), records_.size());
        records_.push_back(std::move(rec));
    }
}

bool ResultStore::contains(RecordKind kind, const RecordKey& key) const {
    return index_.count(dedup_key(kind, key)) != 0;
}

const ResultRecord* ResultStore::find(RecordKind kind, const RecordKey& key) const {
    auto it = index_.find(dedup_key(kind, key));
    return it == index_.end() ? nullptr : &records_[it->second];
}

bool ResultStore::append(const ResultRecord& record) {
    std::string key = dedup_key(record.kind, record.key);
    if (index_.count(key)) return false;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open result store: " + path_);
    out << render_json(record) << '\n';
    index_.emplace(std::move(key), records_.size());
    records_.push_back(record);
    return true;
}

}  // namespace dgap
