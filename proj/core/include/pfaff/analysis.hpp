#pragma once

#include "pfaff/document.hpp"
#include "pfaff/integral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfaff {

inline constexpr int report_schema_version = 1;

std::string tool_version();

struct AnalysisOptions {
    std::optional<std::string> system;    ///< default: first declared
    std::optional<std::string> point;     ///< named point
    std::optional<Point> coordinates;     ///< explicit point, overrides `point`
    std::optional<std::string> seed;      ///< restrict seeded chains to this seed
    SearchOptions search;
};

/// One chain construction at one point: the default stream or a named seed.
struct ChainEntry {
    std::string label; ///< "default" or the seed name
    CharacterReport report;
    std::optional<bool> singular_char2;
    bool systatic = false;
};

struct PointAnalysis {
    std::string name;
    Point coordinates;
    bool degenerate = false;
    std::string diagnostic; ///< why the point is degenerate, or why a step was refused
    std::size_t annihilator_dim = 0;
    std::optional<CharacteristicData> characteristic;
    std::vector<ChainEntry> chains;
    std::optional<unsigned> gender_modulo_system;
    std::optional<unsigned> gender_absolute;
    /// Darboux class per generator; empty where the generator vanishes at the point.
    std::vector<std::optional<unsigned>> darboux_class;
};

struct AnalysisReport {
    std::string tool_version;
    std::string input_digest;
    std::string system_name;
    std::vector<std::string> chart;
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<std::string> generators;
    std::vector<std::string> pivot_polynomials;
    std::vector<std::size_t> derived_ranks;
    std::vector<std::vector<std::string>> derived_generators; ///< per flag entry
    bool derived_terminal_integrable = false;
    bool integrable = false;
    bool flag_system = false;
    bool flag_trivial = false;
    std::vector<PointAnalysis> points;

    const PointAnalysis& at(std::string_view point) const;
};

/// Runs every analysis on one system of the document. Degenerate points give
/// a diagnostic entry instead of an error.
AnalysisReport analyze(const SystemDocument& doc, const AnalysisOptions& options = {}, std::string_view source = {});

/// Single JSON document, two-space indentation, trailing newline.
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

} // namespace pfaff
