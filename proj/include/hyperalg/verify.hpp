#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalg/analysis.hpp"

namespace hyperalg {

enum class Outcome { holds, hypothesis_not_met, violated };

const char* to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::holds;
    std::string witness; // set when violated
};

class UnknownStatement : public std::invalid_argument {
  public:
    explicit UnknownStatement(std::string_view id) : std::invalid_argument("unknown statement: " + std::string(id)) {}
};

struct StatementInfo {
    std::string_view id;
    std::string_view summary;
};

/// Every checkable statement, theorems first, in a fixed order.
const std::vector<StatementInfo>& statement_catalog();

/// Evaluates one statement on one hypergroup. Statements with a hypothesis
/// report hypothesis_not_met when it fails; universally quantified identities
/// hold or are violated.
Verdict verify_statement(std::string_view id, const Analysis& a);
Verdict verify_statement(std::string_view id, const Hypergroup& h);

} // namespace hyperalg
