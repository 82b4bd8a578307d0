#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dgap/gaps.hpp"
#include "dgap/redei.hpp"
#include "dgap/search.hpp"

namespace dgap {

enum class RecordKind { gap, scan, cert, search };

const char* record_kind_name(RecordKind k) noexcept;

// Scan payload as persisted: the per-d table is carried only when the
// caller asked for the full table.
struct ScanReport {
    std::optional<std::vector<std::uint32_t>> per_d;  // g(d*A) for d = 1..p-1
    std::uint32_t sup = 0;
    std::uint32_t argmax_d = 0;
    Rational l_value;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

ScanReport to_scan_report(const DilateScan& scan, bool include_per_d);

struct RecordKey {
    std::uint32_t p = 0;
    std::optional<std::vector<std::uint32_t>> set;  // GAP/SCAN/CERT
    std::optional<std::uint32_t> n;                 // SEARCH
    std::optional<std::string> mode;                // SEARCH
    std::optional<std::uint64_t> seed;              // SEARCH, random mode

    friend bool operator==(const RecordKey&, const RecordKey&) = default;
};

struct ResultRecord {
    RecordKind kind = RecordKind::gap;
    int schema_version = 1;
    RecordKey key;
    std::variant<GapReport, ScanReport, CertificateReport, SearchRecord> payload;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_gap_record(const GapReport& report, std::span<const std::uint32_t> set);
ResultRecord make_scan_record(const ScanReport& report, std::uint32_t p,
                              std::span<const std::uint32_t> set);
ResultRecord make_cert_record(const CertificateReport& report);
ResultRecord make_search_record(const SearchRecord& record);

// One JSON object per record, fixed key order, no whitespace: identical
// input yields byte-identical output. Rationals render as
// {"num": i, "den": j} in lowest terms.
std::string render_json(const ResultRecord& record);
ResultRecord parse_json(const std::string& line);

// Fixed-column CSV export (header and one row per record). Lossy; CERT
// payloads are rejected with std::invalid_argument. CSV is export-only:
// records cannot be parsed back from it.
std::string render_csv(std::span<const ResultRecord> records);
std::string render_csv(const ResultRecord& record);

// Append-only JSONL store, deduplicated by (kind, key). Loads any existing
// file on open; append() is a no-op returning false for a duplicate key.
class ResultStore {
public:
    explicit ResultStore(std::string path);

    bool contains(RecordKind kind, const RecordKey& key) const;
    const ResultRecord* find(RecordKind kind, const RecordKey& key) const;
    bool append(const ResultRecord& record);

    const std::vector<ResultRecord>& records() const noexcept { return records_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
    std::vector<ResultRecord> records_;
    std::unordered_map<std::string, std::size_t> index_;  // serialized (kind, key) -> slot
};

}  // namespace dgap
