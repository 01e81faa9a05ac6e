#pragma once

#include <string>
#include <vector>

#include "hyperalg/verify.hpp"

namespace hyperalg {

enum class Provenance { enumerated, group_import, trivial };

const char* to_string(Provenance p);

struct CorpusEntry {
    std::string name;
    Provenance provenance = Provenance::enumerated;
    Hypergroup hypergroup;
};

/// The trivial hypergroup, canonical enumerations of orders 2..max_enumerated
/// (0 for none) and thin imports of the builtin groups up to groups_up_to.
std::vector<CorpusEntry> build_corpus(std::size_t max_enumerated, std::size_t groups_up_to);

struct StatementTally {
    std::string id;
    std::size_t holds = 0;
    std::size_t hypothesis_not_met = 0;
    std::size_t violated = 0;
};

struct Violation {
    std::string entry;
    std::string statement;
    std::string witness;
    std::string serialized; // the offending hypergroup in file format
};

struct HarnessReport {
    std::size_t entries = 0;
    std::vector<StatementTally> tallies; // in the requested statement order
    std::vector<Violation> violations;   // in corpus order

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::size_t violated_count() const { return violations.size(); }
};

/// Evaluates each statement on each entry. Entries are analysed in parallel;
/// the report does not depend on the thread count. Throws UnknownStatement
/// before doing any work if an id is not in the catalog.
HarnessReport run_harness(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& statements);

std::vector<std::string> all_statement_ids();

} // namespace hyperalg
