#pragma once

#include "pfaff/analysis.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pfaff {

/// Where an expected value comes from: "literature" (a worked example),
/// "hand_computed" (independent hand calculation) or "identity" (follows
/// from definitions).
struct Check {
    std::string key;
    std::string expected;
    std::string provenance;
    std::string note;
    std::function<std::string(const SystemDocument&, const AnalysisReport&)> actual;
};

struct CatalogEntry {
    std::string name;
    std::string title;
    std::string source; ///< DSL text
    AnalysisOptions options;
    std::vector<Check> checks;

    SystemDocument document() const { return parse_document(source); }
    AnalysisReport analyze() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws DomainError for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

struct CheckResult {
    std::string key;
    std::string expected;
    std::string actual;
    std::string provenance;
    std::string note;
    bool ok = false;
};

struct EntryResult {
    std::string name;
    std::vector<CheckResult> checks;
    std::optional<AnalysisReport> report;
    std::string error;
    bool ok() const;
};

EntryResult run_entry(const CatalogEntry& entry);
std::vector<EntryResult> run_all();

std::string results_json(const std::vector<EntryResult>& results);
std::string results_text(const std::vector<EntryResult>& results);

} // namespace pfaff
