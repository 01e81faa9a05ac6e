#include "hyperalg/analysis.hpp"

namespace hyperalg {

Analysis::Analysis(Hypergroup h)
    : h_{std::move(h)},
      lattice_{h_},
      thin_part_{hyperalg::thin_part(h_)},
      center_{hyperalg::center(h_)},
      closed_center_{hyperalg::closed_center(h_).members()},
      thin_residue_{hyperalg::thin_residue(h_, lattice_).members()},
      lower_central_{lower_central_series(h_)},
      center_series_{closed_center_series(h_)},
      solvable_{is_solvable(h_, lattice_)},
      rt_{rt_analysis(h_, lattice_)} {
    quotients_.reserve(lattice_.size());
    for (const auto& f : lattice_.members()) quotients_.push_back(build_quotient(h_, f.members()));
}

} // namespace hyperalg
