#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperalg/hypergroup.hpp"

namespace hyperalg {

class EmptySet : public std::invalid_argument {
  public:
    EmptySet() : std::invalid_argument("operation requires a nonempty element set") {}
};

class NotClosed : public std::invalid_argument {
  public:
    explicit NotClosed(ElementSet s) : std::invalid_argument("not a closed subset: {" + s.to_string() + "}"), set_{s} {}
    [[nodiscard]] ElementSet set() const { return set_; }

  private:
    ElementSet set_;
};

/// F*F is contained in F. Throws EmptySet on the empty set, and
/// InternalMismatch if the equivalent test (1 in F, F* = F, FF = F) disagrees.
bool is_closed(const Hypergroup& h, ElementSet s);

/// Fixpoint of B -> B u BB from {0} u A u A*. Returns the bare member set.
ElementSet closure_of(const Hypergroup& h, ElementSet seed);

/// A closed subset of some hypergroup with its normality flags in that hypergroup.
class ClosedSubset {
  public:
    /// Throws NotClosed (or EmptySet).
    static ClosedSubset make(const Hypergroup& h, ElementSet members);

    [[nodiscard]] ElementSet members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool normal() const { return normal_; }
    [[nodiscard]] bool strongly_normal() const { return strongly_normal_; }

    bool operator==(const ClosedSubset& o) const { return members_ == o.members_; }

  private:
    ClosedSubset(ElementSet m, bool n, bool s) : members_{m}, normal_{n}, strongly_normal_{s} {}

    ElementSet members_;
    bool normal_ = false;
    bool strongly_normal_ = false;
};

/// Smallest closed subset containing A. Throws EmptySet.
ClosedSubset generated_closure(const Hypergroup& h, ElementSet a);

/// F h is contained in h F for all h in `ambient` (a closed subset containing F);
/// products are taken in `h`, which is the same as in the sub-hypergroup on `ambient`.
bool is_normal_in(const Hypergroup& h, ElementSet f, ElementSet ambient);
/// h* F h is contained in F for all h in `ambient`.
bool is_strongly_normal_in(const Hypergroup& h, ElementSet f, ElementSet ambient);

inline bool is_normal(const Hypergroup& h, ElementSet f) { return is_normal_in(h, f, h.elements()); }
inline bool is_strongly_normal(const Hypergroup& h, ElementSet f) {
    return is_strongly_normal_in(h, f, h.elements());
}

/// Number of distinct double cosets F x F with x in `ambient`.
std::size_t double_coset_count(const Hypergroup& h, ElementSet f, ElementSet ambient);

/// Every closed subset of one hypergroup, sorted by (size, member list), with
/// containment and the normal-in / strongly-normal-in relations evaluated
/// inside the larger member.
class ClosedSubsetLattice {
  public:
    explicit ClosedSubsetLattice(const Hypergroup& h);

    [[nodiscard]] const std::vector<ClosedSubset>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] const ClosedSubset& operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] std::optional<std::size_t> find(ElementSet s) const;
    [[nodiscard]] std::size_t bottom() const { return 0; }
    [[nodiscard]] std::size_t top() const { return members_.size() - 1; }

    [[nodiscard]] bool contained(std::size_t i, std::size_t j) const { return rel(i, j).contained; }
    [[nodiscard]] bool normal_in(std::size_t i, std::size_t j) const { return rel(i, j).normal; }
    [[nodiscard]] bool strongly_normal_in(std::size_t i, std::size_t j) const { return rel(i, j).strongly_normal; }
    /// |K_j // K_i| for K_i contained in K_j; 0 otherwise.
    [[nodiscard]] std::size_t index_in(std::size_t i, std::size_t j) const { return rel(i, j).index; }

    [[nodiscard]] bool is_subnormal(std::size_t i) const { return reaches_top(i, false); }
    [[nodiscard]] bool is_strongly_subnormal(std::size_t i) const { return reaches_top(i, true); }

    /// Indices of the maximal proper closed subsets.
    [[nodiscard]] std::vector<std::size_t> maximal() const;

  private:
    struct Relation {
        bool contained = false;
        bool normal = false;
        bool strongly_normal = false;
        std::size_t index = 0;
    };
    [[nodiscard]] const Relation& rel(std::size_t i, std::size_t j) const { return relations_[i * members_.size() + j]; }
    [[nodiscard]] bool reaches_top(std::size_t from, bool strong) const;

    std::vector<ClosedSubset> members_;
    std::vector<Relation> relations_;
};

inline ClosedSubsetLattice all_closed_subsets(const Hypergroup& h) { return ClosedSubsetLattice{h}; }

bool is_subnormal(const ClosedSubsetLattice& lattice, ElementSet f);
bool is_strongly_subnormal(const ClosedSubsetLattice& lattice, ElementSet f);

/// { h : e_h e_f = e_f e_h for all f in F }.
ElementSet centralizer(const Hypergroup& h, ElementSet f);
ElementSet center(const Hypergroup& h);
/// Central elements whose star is also central. Asserted normal and closed.
ClosedSubset closed_center(const Hypergroup& h);
/// { h : h* F h contained in F }. Not closed in general.
ElementSet strong_normalizer(const Hypergroup& h, ElementSet f);

std::vector<ClosedSubset> maximal_closed_subsets(const ClosedSubsetLattice& lattice);
std::vector<ClosedSubset> maximal_closed_subsets(const Hypergroup& h);

/// The hypergroup induced on a closed subset K, relabelled 0..|K|-1 in
/// ascending order (so the identity stays at 0).
struct SubHypergroup {
    Hypergroup sub;
    std::vector<Element> to_parent;
    std::vector<int> from_parent; // -1 outside K

    [[nodiscard]] ElementSet to_sub(ElementSet parent_set) const;
    [[nodiscard]] ElementSet to_parent_set(ElementSet sub_set) const;
};

SubHypergroup restrict_to(const Hypergroup& h, ElementSet closed);

} // namespace hyperalg
