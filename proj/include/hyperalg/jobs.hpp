#pragma once

#include <optional>

namespace hyperalg {

/// Parses HYPERALG_JOBS; nullopt when unset. Throws std::invalid_argument
/// unless the value is a positive integer.
std::optional<int> jobs_from_env();

/// Caps the number of threads used by parallel kernels.
void set_jobs(int jobs);
int max_jobs();

} // namespace hyperalg
