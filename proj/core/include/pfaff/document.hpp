#pragma once

#include "pfaff/system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfaff {

struct NamedForm {
    std::string name;
    DifferentialForm form;
    friend bool operator==(const NamedForm&, const NamedForm&) = default;
};

struct NamedSystem {
    std::string name;
    std::vector<std::string> members;
    friend bool operator==(const NamedSystem&, const NamedSystem&) = default;
};

struct NamedPoint {
    std::string name;
    Point coordinates;
    friend bool operator==(const NamedPoint&, const NamedPoint&) = default;
};

struct NamedSeed {
    std::string name;
    std::vector<Vector> vectors;
    friend bool operator==(const NamedSeed&, const NamedSeed&) = default;
};

/// Parsed input file. Declarations keep their source order.
struct SystemDocument {
    std::vector<std::string> chart;
    std::vector<NamedForm> forms;
    std::vector<NamedSystem> systems;
    std::vector<NamedPoint> points;
    std::vector<NamedSeed> seeds;

    std::size_t nvars() const { return chart.size(); }
    const DifferentialForm& form(std::string_view name) const;
    /// Throws DomainError for an unknown name.
    PfaffianSystem system(std::string_view name) const;
    /// The first declared system.
    const NamedSystem& default_system() const;
    /// `origin` resolves to the zero point unless declared explicitly.
    Point point(std::string_view name) const;
    const NamedSeed& seed(std::string_view name) const;

    friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

/// Throws ParseError with line and column.
SystemDocument parse_document(std::string_view text);

/// Canonical source text; parse_document(render(doc)) == doc.
std::string render(const SystemDocument& doc);

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

} // namespace pfaff
