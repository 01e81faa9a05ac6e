#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperalg/verify.hpp"

namespace hyperalg {

/// Ordered key/value view of one analysis plus every catalog verdict.
/// Set-valued fields are comma-joined ascending indices.
struct AnalysisReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> fields;
    std::size_t violated = 0;

    [[nodiscard]] const std::string* get(std::string_view key) const;
};

/// Throws InternalMismatch if the analysis is inconsistent
/// (nilpotent but not solvable, thin residue not strongly normal, ...).
AnalysisReport make_report(const Analysis& a, std::string_view name);

/// `key = value`, one per line.
std::string render_machine(const AnalysisReport& r);
/// Grouped, human-oriented layout of the same fields.
std::string render_text(const AnalysisReport& r);

} // namespace hyperalg
