#include "hyperalg/jobs.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include <omp.h>

namespace hyperalg {

std::optional<int> jobs_from_env() {
    const char* raw = std::getenv("HYPERALG_JOBS");
    if (raw == nullptr) return std::nullopt;
    const std::string_view text{raw};
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value <= 0)
        throw std::invalid_argument("HYPERALG_JOBS must be a positive integer, got '" + std::string(text) + "'");
    return value;
}

void set_jobs(int jobs) {
    if (jobs <= 0) throw std::invalid_argument("job count must be positive");
    omp_set_num_threads(jobs);
}

int max_jobs() { return omp_get_max_threads(); }

} // namespace hyperalg
