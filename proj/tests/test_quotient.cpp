#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hyperalg/closed.hpp"
#include "hyperalg/enumerate.hpp"
#include "hyperalg/quotient.hpp"

using namespace hyperalg;
using namespace fixtures;

namespace {

/// H//F straight from the definition: blocks FhF, a^F b^F = {x^F : x in aFb}.
std::vector<ElementSet> induced_by_definition(const Hypergroup& h, ElementSet f, std::vector<ElementSet>& blocks) {
    blocks.clear();
    for (Element x = 0; x < h.order(); ++x) {
        const auto block = h.set_product(h.set_product(f, ElementSet::singleton(x)), f);
        if (std::find(blocks.begin(), blocks.end(), block) == blocks.end()) blocks.push_back(block);
    }
    std::sort(blocks.begin(), blocks.end(), [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
    auto index_of = [&](Element x) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (blocks[b].contains(x)) return static_cast<Element>(b);
        return Element{0};
    };
    std::vector<ElementSet> table;
    for (const auto a : blocks)
        for (const auto b : blocks) {
            ElementSet cell;
            for (auto x : h.set_product(h.set_product(ElementSet::singleton(a.min()), f), ElementSet::singleton(b.min())))
                cell.insert(index_of(x));
            table.push_back(cell);
        }
    return table;
}

} // namespace

TEST_CASE("double cosets") {
    const auto s3 = group("S3");
    CHECK(double_coset(s3, 1, s3_a3) == s3_a3);
    CHECK(double_coset(s3, 4, ElementSet::of({0})) == ElementSet::of({4}));
    CHECK(double_coset(s3, 3, s3_a3) == ElementSet::of({3, 4, 5}));
}

TEST_CASE("quotient by H and by the identity") {
    for (const auto& h : {group("S3"), order2_nonthin(), group("Q8")}) {
        const auto top = build_quotient(h, h.elements());
        CHECK(top.order() == 1);
        CHECK(quotient_is_thin(top));
        const auto bottom = build_quotient(h, ElementSet::of({0}));
        CHECK(bottom.induced == h); // singleton blocks keep labels
    }
}

TEST_CASE("S3 // A3 is C2") {
    const auto s3 = group("S3");
    const auto q = build_quotient(s3, s3_a3);
    CHECK(q.order() == 2);
    CHECK(q.blocks[0] == s3_a3);
    CHECK(q.induced == c2_thin());
    CHECK(quotient_is_thin(q));
    CHECK(is_strongly_normal(s3, s3_a3));
    CHECK(project_subset(q, s3_a3) == ElementSet::of({0}));
    CHECK(lift_blocks(q, ElementSet::of({0})) == s3_a3);
    CHECK(project_subset(q, ElementSet::of({0, 1, 2, 3})) == ElementSet::of({0, 1}));
}

TEST_CASE("non-thin order 2 over the identity is not thin") {
    const auto h = order2_nonthin();
    CHECK_FALSE(quotient_is_thin(build_quotient(h, ElementSet::of({0}))));
    CHECK_FALSE(is_strongly_normal(h, ElementSet::of({0})));
}

TEST_CASE("quotient matches coset arithmetic and thinness matches strong normality") {
    std::vector<Hypergroup> corpus;
    for (std::size_t n = 2; n <= 4; ++n)
        for (auto& h : enumerate_hypergroups(n, true).hypergroups) corpus.push_back(std::move(h));
    for (const auto& g : builtin_groups(12)) corpus.push_back(from_group(g));
    std::size_t checked = 0;
    for (const auto& h : corpus) {
        const ClosedSubsetLattice lattice{h};
        for (const auto& f : lattice.members()) {
            const auto q = build_quotient(h, f.members());
            std::vector<ElementSet> blocks;
            const auto table = induced_by_definition(h, f.members(), blocks);
            CHECK(q.blocks == blocks);
            CHECK(std::ranges::equal(q.induced.table(), table));
            CHECK(check_axioms(q.order(), table).ok());
            CHECK(quotient_is_thin(q) == f.strongly_normal());
            ++checked;
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("quotient by a non-closed set is refused") {
    CHECK_THROWS_AS(build_quotient(group("S3"), ElementSet::of({0, 1})), NotClosed);
}
