#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperalg/quotient.hpp"

namespace hyperalg {

/// [a,b] = a* b* a b, as a set.
ElementSet commutator_elements(const Hypergroup& h, Element a, Element b);

/// [A,B]: the closed subset generated by every [a,b] with a in A, b in B.
/// Throws EmptySet.
ClosedSubset commutator_subset(const Hypergroup& h, ElementSet a, ElementSet b);

/// H_1 = H, H_{k+1} = [H_k, H], until two consecutive terms agree.
struct LowerCentralSeries {
    std::vector<ElementSet> terms; // terms[0] = H_1; the last entry is the stable term

    [[nodiscard]] bool nilpotent() const { return terms.back() == ElementSet::singleton(0); }
    /// Least c with H_{c+1} = {1}; meaningful only when nilpotent.
    [[nodiscard]] std::size_t nilpotency_class() const;
    /// H_s for s >= 1, repeating the stable term past the end.
    [[nodiscard]] ElementSet term(std::size_t s) const;
};

LowerCentralSeries lower_central_series(const Hypergroup& h);

struct NilpotencyVerdict {
    bool nilpotent = false;
    std::size_t nilpotency_class = 0;
};
NilpotencyVerdict is_nilpotent(const Hypergroup& h);

/// Z*_0 = {1}, Z*_i the lift of Z*(H // Z*_{i-1}), until it stabilizes.
struct CentralSeries {
    std::vector<ElementSet> terms; // terms[0] = Z*_0 = {1}; the last entry is Z*_inf

    [[nodiscard]] ElementSet hypercenter() const { return terms.back(); }
    [[nodiscard]] ElementSet term(std::size_t i) const { return i < terms.size() ? terms[i] : terms.back(); }
};

CentralSeries closed_center_series(const Hypergroup& h);

/// Thin residue, computed as the intersection of all strongly normal closed
/// subsets and as [H, {1}]. Throws InternalMismatch if the two disagree.
ClosedSubset thin_residue(const Hypergroup& h, const ClosedSubsetLattice& lattice);
ClosedSubset thin_residue(const Hypergroup& h);

struct ChainStep {
    ElementSet subset;
    std::size_t quotient_order = 0; // |F_i // F_{i-1}|
};

/// {1} = F_0 < F_1 < ... < F_n = H; steps[0] is F_0 with quotient order 0.
struct SolvabilityChain {
    std::vector<ChainStep> steps;
};

/// Depth-first search over the lattice for a chain whose every step quotient
/// (taken inside the larger term) is thin of prime order.
std::optional<SolvabilityChain> is_solvable(const Hypergroup& h, const ClosedSubsetLattice& lattice);
std::optional<SolvabilityChain> is_solvable(const Hypergroup& h);

struct SylowSubset {
    std::uint64_t prime = 0;
    ElementSet subset;
    std::uint64_t valency = 0;
};

struct RTReport {
    SolvabilityChain chain; // a witness chain with thin quotients
    std::uint64_t valency = 0;
    std::vector<SylowSubset> sylow;         // ordered by prime, then lattice order
    std::vector<ElementSet> non_rt_subsets; // closed subsets skipped because they are not RT
};

/// Residually-thin analysis. Valencies of every closed subset are computed
/// over all chains with thin quotients; returns nullopt when H is not RT and
/// throws InternalMismatch if two chains give different valencies.
std::optional<RTReport> rt_analysis(const Hypergroup& h, const ClosedSubsetLattice& lattice);
std::optional<RTReport> rt_analysis(const Hypergroup& h);

/// Prime factorization as prime -> exponent.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

} // namespace hyperalg
