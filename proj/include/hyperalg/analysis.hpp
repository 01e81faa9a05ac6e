#pragma once

#include <optional>
#include <vector>

#include "hyperalg/series.hpp"

namespace hyperalg {

/// Every invariant of one hypergroup that the report and the statement
/// checks need, computed once. Immutable after construction.
class Analysis {
  public:
    explicit Analysis(Hypergroup h);

    [[nodiscard]] const Hypergroup& hypergroup() const { return h_; }
    [[nodiscard]] const ClosedSubsetLattice& lattice() const { return lattice_; }
    /// H // F for the lattice member with the same index.
    [[nodiscard]] const Quotient& quotient(std::size_t lattice_index) const { return quotients_[lattice_index]; }

    [[nodiscard]] ElementSet thin_part() const { return thin_part_; }
    [[nodiscard]] ElementSet center() const { return center_; }
    [[nodiscard]] ElementSet closed_center() const { return closed_center_; }
    [[nodiscard]] ElementSet thin_residue() const { return thin_residue_; }
    [[nodiscard]] const LowerCentralSeries& lower_central() const { return lower_central_; }
    [[nodiscard]] const CentralSeries& center_series() const { return center_series_; }
    [[nodiscard]] const std::optional<SolvabilityChain>& solvable() const { return solvable_; }
    [[nodiscard]] const std::optional<RTReport>& rt() const { return rt_; }

    [[nodiscard]] bool nilpotent() const { return lower_central_.nilpotent(); }

  private:
    Hypergroup h_;
    ClosedSubsetLattice lattice_;
    std::vector<Quotient> quotients_;
    ElementSet thin_part_;
    ElementSet center_;
    ElementSet closed_center_;
    ElementSet thin_residue_;
    LowerCentralSeries lower_central_;
    CentralSeries center_series_;
    std::optional<SolvabilityChain> solvable_;
    std::optional<RTReport> rt_;
};

} // namespace hyperalg
