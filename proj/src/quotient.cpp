#include "hyperalg/quotient.hpp"

namespace hyperalg {

ElementSet double_coset(const Hypergroup& h, Element x, ElementSet f) {
    return h.set_product(h.set_product(f, ElementSet::singleton(x)), f);
}

Quotient build_quotient(const Hypergroup& h, ElementSet f) {
    if (!is_closed(h, f)) throw NotClosed{f};
    const auto n = h.order();
    std::vector<ElementSet> blocks;
    std::vector<Element> block_of(n, 0);
    ElementSet assigned;
    for (Element x = 0; x < n; ++x) {
        if (assigned.contains(x)) continue;
        const auto b = double_coset(h, x, f);
        if (b.intersects(assigned)) throw InternalMismatch("double cosets overlap at element " + std::to_string(x));
        for (auto y : b) block_of[y] = static_cast<Element>(blocks.size());
        blocks.push_back(b);
        assigned |= b;
    }

    auto project = [&](ElementSet s) {
        ElementSet out;
        for (auto x : s) out.insert(block_of[x]);
        return out;
    };

    const auto m = blocks.size();
    std::vector<ElementSet> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            // Every choice of representatives must give the same block set.
            const auto cell = project(h.set_product(h.set_product(blocks[a], f), blocks[b]));
            const auto rep = project(h.set_product(
                h.set_product(ElementSet::singleton(blocks[a].min()), f), ElementSet::singleton(blocks[b].min())));
            if (cell != rep)
                throw InternalMismatch("quotient product depends on representatives at blocks " + std::to_string(a) +
                                       "," + std::to_string(b));
            table[a * m + b] = cell;
        }

    Hypergroup induced = [&] {
        try {
            return Hypergroup::validate(m, std::move(table));
        } catch (const InvalidHypergroup& e) {
            throw InternalMismatch(std::string("quotient failed validation: ") + e.what());
        }
    }();
    for (std::size_t a = 0; a < m; ++a) {
        if (induced.star(static_cast<Element>(a)) != block_of[h.star(blocks[a].min())])
            throw InternalMismatch("quotient star differs from projected star at block " + std::to_string(a));
    }
    return Quotient{f, std::move(blocks), std::move(block_of), std::move(induced)};
}

bool quotient_is_thin(const Quotient& q) { return is_thin(q.induced); }

ElementSet project_subset(const Quotient& q, ElementSet s) {
    ElementSet out;
    for (auto x : s) out.insert(q.block_of[x]);
    return out;
}

ElementSet lift_blocks(const Quotient& q, ElementSet blocks) {
    ElementSet out;
    for (auto b : blocks) out |= q.blocks[b];
    return out;
}

} // namespace hyperalg
