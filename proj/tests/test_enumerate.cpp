#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "hyperalg/enumerate.hpp"
#include "hyperalg/harness.hpp"
#include "hyperalg/jobs.hpp"
#include "oracles/brute_hypergroup.hpp"

using namespace hyperalg;
using namespace fixtures;

namespace {

using Key = std::vector<std::uint64_t>;

std::set<Key> keys(const std::vector<Hypergroup>& hs) {
    std::set<Key> out;
    for (const auto& h : hs) out.insert(table_key(h));
    return out;
}

Key raw_key(const oracle::RawTable& t) { return {t.cells.begin(), t.cells.end()}; }

/// Least relabeled table over permutations fixing 0, on raw tables.
Key raw_canonical(const oracle::RawTable& t) {
    const auto n = t.n;
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    Key best;
    do {
        Key k(n * n);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                oracle::Mask image = 0;
                for (unsigned x = 0; x < n; ++x)
                    if (t.at(a, b) >> x & 1) image |= oracle::Mask{1} << perm[x];
                k[perm[a] * n + perm[b]] = image;
            }
        if (best.empty() || k < best) best = k;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

void compare_with_brute_force(std::size_t n) {
    const auto brute = oracle::enumerate_brute(n);
    std::set<Key> expected, expected_classes;
    for (const auto& t : brute) {
        expected.insert(raw_key(t));
        expected_classes.insert(raw_canonical(t));
    }
    const auto all = enumerate_hypergroups(n, false);
    CHECK(keys(all.hypergroups) == expected);
    CHECK(all.counters.survivors == expected.size());
    CHECK(keys(enumerate_hypergroups(n, true).hypergroups) == expected_classes);
}

} // namespace

TEST_CASE("order 2: C2 and a.a = {1,a}") {
    const auto r = enumerate_hypergroups(2, false);
    REQUIRE(r.hypergroups.size() == 2);
    CHECK(r.hypergroups[0] == c2_thin());
    CHECK(r.hypergroups[1] == order2_nonthin());
    CHECK(r.counters.candidates == 3);
    CHECK(r.counters.rejects == 1);
    CHECK(r.counters.survivors == 2);
    const auto naive = enumerate_hypergroups(2, false, Strategy::naive);
    CHECK(naive.counters.rejects_by_axiom[static_cast<std::size_t>(AxiomFailure::no_inverse)] == 1);
}

TEST_CASE("orders outside 2..4 are refused") {
    CHECK_THROWS_AS(enumerate_hypergroups(1, false), OrderOutOfRange);
    CHECK_THROWS_AS(enumerate_hypergroups(5, false), OrderOutOfRange);
    CHECK_THROWS_AS(enumerate_hypergroups(4, false, Strategy::naive), OrderOutOfRange);
}

TEST_CASE("pruned search agrees with the naive sweep") {
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto naive = enumerate_hypergroups(n, false, Strategy::naive);
        const auto pruned = enumerate_hypergroups(n, false, Strategy::pruned);
        const auto serial = enumerate_hypergroups(n, false, Strategy::pruned_serial);
        CHECK(keys(naive.hypergroups) == keys(pruned.hypergroups));
        CHECK(pruned.hypergroups == serial.hypergroups);
        CHECK(naive.counters.candidates == pruned.counters.candidates);
        CHECK(naive.counters.rejects == pruned.counters.rejects);
        for (const auto& c : {naive.counters, pruned.counters, serial.counters})
            CHECK(c.candidates == c.rejects + c.survivors);
    }
}

TEST_CASE("orders 2 and 3 against the brute-force oracle") {
    compare_with_brute_force(2);
    compare_with_brute_force(3);
}

TEST_CASE("order 4 against the brute-force oracle" * doctest::skip()) { compare_with_brute_force(4); }

TEST_CASE("frozen counts") {
    // from the brute-force oracle above
    CHECK(enumerate_hypergroups(3, false).hypergroups.size() == 15);
    CHECK(enumerate_hypergroups(3, true).hypergroups.size() == 10);
    CHECK(enumerate_hypergroups(4, false).hypergroups.size() == 420);
    CHECK(enumerate_hypergroups(4, true).hypergroups.size() == 102);
    const auto c4 = enumerate_hypergroups(4, false).counters;
    CHECK(c4.candidates == 38443359375ULL); // 15^9
    CHECK(c4.candidates == c4.rejects + c4.survivors);
}

TEST_CASE("canonical forms") {
    for (const auto& h : enumerate_hypergroups(3, false).hypergroups) {
        const auto c = canonical_form(h);
        CHECK(canonical_form(c) == c);
        CHECK(table_key(c) <= table_key(h));
    }
}

TEST_CASE("enumeration does not depend on the thread count") {
    const auto threads = max_jobs();
    set_jobs(1);
    const auto one = enumerate_hypergroups(4, true);
    set_jobs(4);
    const auto four = enumerate_hypergroups(4, true);
    set_jobs(threads);
    CHECK(one.hypergroups == four.hypergroups);
    CHECK(one.counters.rejects == four.counters.rejects);
}

TEST_CASE("group tables") {
    const auto small = builtin_groups(4);
    std::vector<std::string> names;
    for (const auto& g : small) names.push_back(g.name);
    CHECK(names == std::vector<std::string>{"C2", "C3", "C4", "V4"});
    CHECK(builtin_groups(12).size() == 23);
    CHECK(builtin_groups(60).size() == 24);
    CHECK(from_group(builtin_group("C2")) == c2_thin());
    CHECK(center(group("S3")) == ElementSet::of({0}));

    CayleyTable broken = builtin_group("C3");
    broken.mul[1 * 3 + 1] = 0;
    CHECK_THROWS_AS(check_group(broken), NotAGroup);
    CHECK_THROWS_AS(from_group(broken), NotAGroup);

    // identity stored at label 2 is moved to 0
    const CayleyTable shifted{"C3'", 3, {1, 2, 0, 2, 0, 1, 0, 1, 2}};
    const auto h = from_group(shifted);
    CHECK(is_thin(h));
    CHECK(h.order() == 3);
}

TEST_CASE("corpus") {
    const auto corpus = build_corpus(3, 8);
    CHECK(corpus.size() == 1 + 2 + 10 + 13);
    CHECK(corpus.front().provenance == Provenance::trivial);
    CHECK(corpus[1].name == "order2-0");
    CHECK(build_corpus(0, 0).size() == 1);
}

TEST_CASE("harness") {
    const std::vector<CorpusEntry> single{{"nonthin", Provenance::enumerated, order2_nonthin()}};
    SUBCASE("empty statement list") {
        const auto r = run_harness(single, {});
        CHECK(r.tallies.empty());
        CHECK(r.ok());
    }
    SUBCASE("hypothesis not met") {
        const auto r = run_harness(single, {"thm-strongly"});
        REQUIRE(r.tallies.size() == 1);
        CHECK(r.tallies[0].hypothesis_not_met == 1);
        CHECK(r.tallies[0].holds == 0);
    }
    SUBCASE("unknown statement") { CHECK_THROWS_AS(run_harness(single, {"thm-center", "bogus"}), UnknownStatement); }
    SUBCASE("thread count does not change the report") {
        const auto corpus = build_corpus(3, 8);
        const auto ids = all_statement_ids();
        const auto threads = max_jobs();
        set_jobs(1);
        const auto one = run_harness(corpus, ids);
        set_jobs(3);
        const auto three = run_harness(corpus, ids);
        set_jobs(threads);
        REQUIRE(one.tallies.size() == three.tallies.size());
        for (std::size_t s = 0; s < one.tallies.size(); ++s) {
            CHECK(one.tallies[s].holds == three.tallies[s].holds);
            CHECK(one.tallies[s].hypothesis_not_met == three.tallies[s].hypothesis_not_met);
        }
        CHECK(one.ok());
        CHECK(three.ok());
    }
}

TEST_CASE("jobs from the environment") {
    setenv("HYPERALG_JOBS", "3", 1);
    CHECK(jobs_from_env() == 3);
    for (const char* bad : {"0", "-2", "x", "2x", ""}) {
        setenv("HYPERALG_JOBS", bad, 1);
        CHECK_THROWS_AS(jobs_from_env(), std::invalid_argument);
    }
    unsetenv("HYPERALG_JOBS");
    CHECK_FALSE(jobs_from_env().has_value());
}
