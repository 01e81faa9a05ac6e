#pragma once

#include <vector>

#include "hyperalg/closed.hpp"

namespace hyperalg {

/// F h F.
ElementSet double_coset(const Hypergroup& h, Element x, ElementSet f);

/// H//F: the double cosets of a closed subset F as a hypergroup in its own right.
///
/// Blocks are ordered by smallest member, so block 0 is F. The induced
/// product is a^F . b^F = { x^F : x in aFb }, and the induced table has been
/// through the full axiom check.
struct Quotient {
    ElementSet kernel;
    std::vector<ElementSet> blocks;
    std::vector<Element> block_of;
    Hypergroup induced;

    [[nodiscard]] std::size_t order() const { return blocks.size(); }
};

/// Throws NotClosed if F is not closed, InternalMismatch if the induced table
/// depends on the choice of coset representatives or fails validation.
Quotient build_quotient(const Hypergroup& h, ElementSet f);

bool quotient_is_thin(const Quotient& q);

/// S//F as a set of block indices.
ElementSet project_subset(const Quotient& q, ElementSet s);
/// Union of the given blocks as a subset of the base hypergroup.
ElementSet lift_blocks(const Quotient& q, ElementSet blocks);

} // namespace hyperalg
