#pragma once

#include <vector>

#include "hyperalg/groups.hpp"
#include "hyperalg/hypergroup.hpp"

namespace fixtures {

using hyperalg::Element;
using hyperalg::ElementSet;
using hyperalg::Hypergroup;

/// Table given as rows of cells, each cell a member list.
inline std::vector<ElementSet> raw(const std::vector<std::vector<std::vector<Element>>>& rows) {
    std::vector<ElementSet> out;
    for (const auto& row : rows)
        for (const auto& cell : row) {
            ElementSet s;
            for (auto e : cell) s.insert(e);
            out.push_back(s);
        }
    return out;
}

inline Hypergroup make(const std::vector<std::vector<std::vector<Element>>>& rows) {
    return Hypergroup::validate(rows.size(), raw(rows));
}

inline Hypergroup c2_thin() { return make({{{0}, {1}}, {{1}, {0}}}); }
/// a.a = {1, a}
inline Hypergroup order2_nonthin() { return make({{{0}, {1}}, {{1}, {0, 1}}}); }
inline Hypergroup group(std::string_view name) { return hyperalg::from_group(hyperalg::builtin_group(name)); }

// S3 labels: 0 = e, 1 = (123), 2 = (132), 3..5 the transpositions.
inline const ElementSet s3_a3 = ElementSet::of({0, 1, 2});

} // namespace fixtures
