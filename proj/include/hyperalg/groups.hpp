#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalg/hypergroup.hpp"

namespace hyperalg {

/// Multiplication table of a finite group: mul[a * order + b] = a b.
struct CayleyTable {
    std::string name;
    std::size_t order = 0;
    std::vector<Element> mul;

    [[nodiscard]] Element at(Element a, Element b) const { return mul[a * order + b]; }
};

class NotAGroup : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Checks closure, a two-sided identity, inverses and associativity; throws
/// NotAGroup naming the first failing witness.
void check_group(const CayleyTable& g);

/// The thin hypergroup with singleton products. If the identity is not
/// element 0 it is swapped with element 0.
Hypergroup from_group(const CayleyTable& g);

/// Every group of order <= max_order up to isomorphism for max_order <= 12,
/// ordered by order; A5 is appended when max_order >= 60.
std::vector<CayleyTable> builtin_groups(std::size_t max_order);

/// Builtin group by name ("C6", "S3", "D4", "Q8", "A5", ...); throws std::invalid_argument.
CayleyTable builtin_group(std::string_view name);

} // namespace hyperalg
