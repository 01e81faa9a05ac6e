#include "hyperalg/harness.hpp"

#include <exception>

#include "hyperalg/enumerate.hpp"
#include "hyperalg/format.hpp"
#include "hyperalg/groups.hpp"

namespace hyperalg {

const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::enumerated: return "enumerated";
    case Provenance::group_import: return "group-import";
    case Provenance::trivial: return "trivial";
    }
    return "?";
}

std::vector<CorpusEntry> build_corpus(std::size_t max_enumerated, std::size_t groups_up_to) {
    std::vector<CorpusEntry> corpus{{"trivial", Provenance::trivial, Hypergroup::trivial()}};
    for (std::size_t n = 2; n <= max_enumerated; ++n) {
        auto result = enumerate_hypergroups(n, true);
        for (std::size_t k = 0; k < result.hypergroups.size(); ++k)
            corpus.push_back({"order" + std::to_string(n) + "-" + std::to_string(k), Provenance::enumerated,
                              std::move(result.hypergroups[k])});
    }
    for (const auto& g : builtin_groups(groups_up_to))
        corpus.push_back({g.name, Provenance::group_import, from_group(g)});
    return corpus;
}

std::vector<std::string> all_statement_ids() {
    std::vector<std::string> out;
    for (const auto& s : statement_catalog()) out.emplace_back(s.id);
    return out;
}

HarnessReport run_harness(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& statements) {
    HarnessReport report;
    report.entries = corpus.size();
    for (const auto& id : statements) {
        bool known = false;
        for (const auto& s : statement_catalog()) known = known || s.id == id;
        if (!known) throw UnknownStatement{id};
        report.tallies.push_back({id});
    }
    if (statements.empty()) return report;

    std::vector<std::vector<Verdict>> verdicts(corpus.size());
    std::exception_ptr failure;
    const auto count = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long e = 0; e < count; ++e) {
        const auto& entry = corpus[static_cast<std::size_t>(e)];
        auto& out = verdicts[static_cast<std::size_t>(e)];
        try {
            const Analysis analysis{entry.hypergroup};
            for (const auto& id : statements) out.push_back(verify_statement(id, analysis));
        } catch (const InternalMismatch& ex) {
            // An inconsistency while building the analysis falsifies every statement on this entry.
            out.assign(statements.size(), Verdict{Outcome::violated, ex.what()});
        } catch (...) {
#pragma omp critical(harness_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t e = 0; e < corpus.size(); ++e)
        for (std::size_t s = 0; s < statements.size(); ++s) {
            const auto& v = verdicts[e][s];
            auto& tally = report.tallies[s];
            switch (v.outcome) {
            case Outcome::holds: ++tally.holds; break;
            case Outcome::hypothesis_not_met: ++tally.hypothesis_not_met; break;
            case Outcome::violated:
                ++tally.violated;
                report.violations.push_back(
                    {corpus[e].name, statements[s], v.witness, serialize_hypergroup(corpus[e].hypergroup, corpus[e].name)});
                break;
            }
        }
    return report;
}

} // namespace hyperalg
