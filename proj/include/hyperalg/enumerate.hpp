#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperalg/hypergroup.hpp"

namespace hyperalg {

class OrderOutOfRange : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Candidate accounting over the post-forcing search space: identity row and
/// column fixed, each of the (n-1)^2 remaining cells ranging over the
/// 2^n - 1 nonempty subsets. candidates = rejects + survivors always.
struct EnumerationCounters {
    std::uint64_t candidates = 0;
    std::uint64_t survivors = 0;
    std::uint64_t rejects = 0;
    /// Rejects by the axiom stage that eliminated them, indexed by AxiomFailure.
    std::array<std::uint64_t, 8> rejects_by_axiom{};

    void reject(AxiomFailure f, std::uint64_t count) {
        rejects += count;
        rejects_by_axiom[static_cast<std::size_t>(f)] += count;
    }
    EnumerationCounters& operator+=(const EnumerationCounters& o);
};

enum class Strategy {
    /// Star-first backtracking with incremental associativity/exchange checks,
    /// subtrees distributed over OpenMP threads.
    pruned,
    /// Same search, one subtree after another on the calling thread.
    pruned_serial,
    /// Every candidate through the full validator. Orders 2 and 3 only.
    naive,
};

struct EnumerationResult {
    std::vector<Hypergroup> hypergroups; // sorted by table, or canonical forms when canonicalized
    EnumerationCounters counters;
};

/// Every hypergroup of order n (2 <= n <= 4) with identity 0. With
/// `canonicalize`, keeps one representative per class of relabelings fixing 0.
/// Throws OrderOutOfRange.
EnumerationResult enumerate_hypergroups(std::size_t order, bool canonicalize, Strategy strategy = Strategy::pruned);

/// Lexicographically least table among all relabelings fixing 0.
Hypergroup canonical_form(const Hypergroup& h);

/// Table cells as raw bit patterns, in row-major order; the ordering key used
/// for deterministic output.
std::vector<std::uint64_t> table_key(const Hypergroup& h);

} // namespace hyperalg
