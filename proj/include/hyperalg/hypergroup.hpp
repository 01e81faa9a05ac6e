#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalg/element_set.hpp"

namespace hyperalg {

enum class AxiomFailure {
    none,
    index_out_of_range, // cell (i,j) names an element >= order
    empty_product,      // cell (i,j) is empty
    identity_violation, // e_i e_0 != {e_i}, or the derived e_0 e_i != {e_i}
    no_inverse,         // no j with 0 in e_i e_j
    ambiguous_inverse,  // several j with 0 in e_i e_j
    assoc_violation,    // e_i (e_j e_k) != (e_i e_j) e_k
    exchange_violation, // k in e_i e_j but j not in e_i* e_k or i not in e_k e_j*
};

const char* to_string(AxiomFailure f);

/// Outcome of an axiom check: the first witness of the first failing stage
/// plus the number of violations found in that stage.
struct AxiomReport {
    AxiomFailure failure = AxiomFailure::none;
    Element i = 0, j = 0, k = 0;
    std::uint64_t violations = 0;

    [[nodiscard]] bool ok() const { return failure == AxiomFailure::none; }
    [[nodiscard]] std::string describe() const;
};

enum class CheckDepth { first_witness, count_all };

/// Runs every axiom stage in order: cell range/emptiness, right identity,
/// inverse existence and uniqueness, associativity over all n^3 triples,
/// exchange over all (i,j,k) with k in e_i e_j, then the derived left
/// identity and star involution. Stops after the first failing stage.
AxiomReport check_axioms(std::size_t order, std::span<const ElementSet> table,
                         CheckDepth depth = CheckDepth::count_all);

class InvalidHypergroup : public std::runtime_error {
  public:
    explicit InvalidHypergroup(AxiomReport report)
        : std::runtime_error(report.describe()), report_{report} {}
    [[nodiscard]] const AxiomReport& report() const { return report_; }

  private:
    AxiomReport report_;
};

/// Raised when two independent computations of the same quantity disagree.
class InternalMismatch : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A validated finite hypergroup. Immutable once constructed.
class Hypergroup {
  public:
    /// Checks all axioms and derives the star map. Throws InvalidHypergroup.
    static Hypergroup validate(std::size_t order, std::vector<ElementSet> table);
    static Hypergroup trivial();

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] ElementSet elements() const { return ElementSet::full(order_); }
    [[nodiscard]] ElementSet product(Element a, Element b) const { return table_[a * order_ + b]; }
    [[nodiscard]] Element star(Element a) const { return star_[a]; }

    /// Union of e_p e_q over p in P, q in Q.
    [[nodiscard]] ElementSet set_product(ElementSet p, ElementSet q) const;
    [[nodiscard]] ElementSet set_star(ElementSet s) const;

    [[nodiscard]] std::span<const ElementSet> table() const { return table_; }
    [[nodiscard]] std::span<const Element> star_map() const { return star_; }

    bool operator==(const Hypergroup& o) const { return order_ == o.order_ && table_ == o.table_; }

  private:
    Hypergroup(std::size_t order, std::vector<ElementSet> table, std::vector<Element> star)
        : order_{order}, table_{std::move(table)}, star_{std::move(star)} {}

    std::size_t order_ = 0;
    std::vector<ElementSet> table_;
    std::vector<Element> star_;
};

/// s*s = {1}.
bool is_thin_element(const Hypergroup& h, Element s);
ElementSet thin_part(const Hypergroup& h);
bool is_thin(const Hypergroup& h);

/// Checks that every product is a singleton and the resulting multiplication
/// is a group with identity 0. Independent of the star map.
bool is_group_check(const Hypergroup& h);

} // namespace hyperalg
