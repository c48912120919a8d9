#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gbcodex/arithmetic.hpp"

namespace gbcodex {

inline constexpr int kCatalogSchemaVersion = 1;

struct CatalogHeader {
    std::int64_t max_length = 0;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t oracle_cap = 26;
    bool parity = true;
    std::int64_t certificate_slack = 0;
    std::int64_t records = 0;
};

nlohmann::json header_to_json(const CatalogHeader& header);
nlohmann::json entry_to_json(const CatalogEntry& entry);
/// Throws std::invalid_argument (or nlohmann::json exceptions) on malformed records.
CatalogEntry entry_from_json(const nlohmann::json& record);

/// Header line followed by one JSON object per entry, newline terminated.
std::string to_ndjson(const CatalogHeader& header, const std::vector<CatalogEntry>& entries);
/// Columns length,k,d,n,alpha,lower,upper,method.
std::string to_csv(const std::vector<CatalogEntry>& entries);

/// Writes atomically-enough for a single owner; throws std::runtime_error naming the path.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

struct VerifyIssue {
    std::size_t line = 0;
    std::string message;
};

struct VerifyResult {
    std::size_t records = 0;
    std::vector<VerifyIssue> issues;
    std::vector<std::string> warnings;
    bool ok() const { return issues.empty(); }
};

/// Recomputes every invariant of one entry; returns the failures.
std::vector<std::string> check_entry(const CatalogEntry& entry);

/// Reads an NDJSON catalog and checks every record.
VerifyResult verify_catalog(std::istream& in);

}  // namespace gbcodex
