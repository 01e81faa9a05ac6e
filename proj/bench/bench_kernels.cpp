// Wall-clock comparison of the parallel kernels against their serial
// references. Usage: bench_kernels [max_order=4] [repeats=3]
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "hyperalg/enumerate.hpp"
#include "hyperalg/harness.hpp"
#include "hyperalg/jobs.hpp"

using namespace hyperalg;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

void row(const std::string& what, double seconds, double reference) {
    std::cout << std::left << std::setw(36) << what << std::right << std::setw(12) << std::fixed
              << std::setprecision(3) << seconds * 1e3 << " ms";
    if (reference > 0) std::cout << "   x" << std::setprecision(2) << reference / seconds;
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t max_order = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (const auto jobs = jobs_from_env()) set_jobs(*jobs);
    std::cout << "threads: " << max_jobs() << "\n";

    for (std::size_t n = 2; n <= max_order; ++n) {
        std::cout << "-- enumerate order " << n << "\n";
        const auto serial = best_of(repeats, [n] { enumerate_hypergroups(n, false, Strategy::pruned_serial); });
        row("pruned, serial", serial, 0);
        row("pruned, parallel", best_of(repeats, [n] { enumerate_hypergroups(n, false, Strategy::pruned); }), serial);
        if (n <= 3) row("naive sweep", best_of(repeats, [n] { enumerate_hypergroups(n, false, Strategy::naive); }), serial);
    }

    std::cout << "-- harness, order <= 3 + groups <= 8, all statements\n";
    const auto corpus = build_corpus(3, 8);
    const auto ids = all_statement_ids();
    const auto parallel = best_of(repeats, [&] { run_harness(corpus, ids); });
    const auto threads = max_jobs();
    set_jobs(1);
    const auto one = best_of(repeats, [&] { run_harness(corpus, ids); });
    set_jobs(threads);
    row("harness, 1 thread", one, 0);
    row("harness, all threads", parallel, one);
}
