#include "hyperalg/closed.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <unordered_set>

namespace hyperalg {

bool is_closed(const Hypergroup& h, ElementSet s) {
    if (s.empty()) throw EmptySet{};
    const bool by_definition = h.set_product(h.set_star(s), s).subset_of(s);
    const bool by_parts = s.contains(0) && h.set_star(s) == s && h.set_product(s, s) == s;
    if (by_definition != by_parts) throw InternalMismatch("closedness tests disagree on {" + s.to_string() + "}");
    return by_definition;
}

ElementSet closure_of(const Hypergroup& h, ElementSet seed) {
    auto b = seed | h.set_star(seed) | ElementSet::singleton(0);
    for (;;) {
        const auto next = b | h.set_product(b, b);
        if (next == b) return b;
        b = next;
    }
}

ClosedSubset ClosedSubset::make(const Hypergroup& h, ElementSet members) {
    if (!is_closed(h, members)) throw NotClosed{members};
    return ClosedSubset{members, is_normal(h, members), is_strongly_normal(h, members)};
}

ClosedSubset generated_closure(const Hypergroup& h, ElementSet a) {
    if (a.empty()) throw EmptySet{};
    return ClosedSubset::make(h, closure_of(h, a));
}

bool is_normal_in(const Hypergroup& h, ElementSet f, ElementSet ambient) {
    bool all = true;
    for (auto x : ambient) {
        const auto fx = h.set_product(f, ElementSet::singleton(x));
        const auto xf = h.set_product(ElementSet::singleton(x), f);
        if (!fx.subset_of(xf)) {
            all = false;
            break;
        }
    }
    if (all) {
        // Normal closed subsets satisfy Fh = hF, not just containment.
        for (auto x : ambient) {
            if (h.set_product(f, ElementSet::singleton(x)) != h.set_product(ElementSet::singleton(x), f))
                throw InternalMismatch("normal subset {" + f.to_string() + "} with Fh != hF at h=" + std::to_string(x));
        }
    }
    return all;
}

bool is_strongly_normal_in(const Hypergroup& h, ElementSet f, ElementSet ambient) {
    for (auto x : ambient) {
        const auto conj = h.set_product(h.set_product(ElementSet::singleton(h.star(x)), f), ElementSet::singleton(x));
        if (!conj.subset_of(f)) return false;
    }
    return true;
}

std::size_t double_coset_count(const Hypergroup& h, ElementSet f, ElementSet ambient) {
    std::size_t count = 0;
    ElementSet seen;
    for (auto x : ambient) {
        if (seen.contains(x)) continue;
        seen |= h.set_product(h.set_product(f, ElementSet::singleton(x)), f);
        ++count;
    }
    return count;
}

ClosedSubsetLattice::ClosedSubsetLattice(const Hypergroup& h) {
    std::unordered_set<std::uint64_t> found;
    std::vector<ElementSet> sets;
    std::deque<ElementSet> work;
    auto add = [&](ElementSet s) {
        if (found.insert(s.bits()).second) {
            sets.push_back(s);
            work.push_back(s);
        }
    };
    add(ElementSet::singleton(0));
    while (!work.empty()) {
        const auto f = work.front();
        work.pop_front();
        for (auto x : h.elements() - f) add(closure_of(h, f | ElementSet::singleton(x)));
    }
    std::sort(sets.begin(), sets.end(), size_lex_less);

    members_.reserve(sets.size());
    for (auto s : sets) members_.push_back(ClosedSubset::make(h, s));

    const auto m = members_.size();
    relations_.assign(m * m, {});
    const auto pairs = static_cast<long>(m * m);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (long p = 0; p < pairs; ++p) {
        const auto i = static_cast<std::size_t>(p) / m;
        const auto j = static_cast<std::size_t>(p) % m;
        const auto small = members_[i].members();
        const auto large = members_[j].members();
        if (!small.subset_of(large)) continue;
        auto& r = relations_[static_cast<std::size_t>(p)];
        r.contained = true;
        try {
            r.normal = is_normal_in(h, small, large);
        } catch (...) {
#pragma omp critical(lattice_failure)
            if (!failure) failure = std::current_exception();
        }
        r.strongly_normal = is_strongly_normal_in(h, small, large);
        r.index = double_coset_count(h, small, large);
    }
    if (failure) std::rethrow_exception(failure);
}

std::optional<std::size_t> ClosedSubsetLattice::find(ElementSet s) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].members() == s) return i;
    return std::nullopt;
}

bool ClosedSubsetLattice::reaches_top(std::size_t from, bool strong) const {
    const auto m = members_.size();
    std::vector<bool> visited(m, false);
    std::deque<std::size_t> queue{from};
    visited[from] = true;
    while (!queue.empty()) {
        const auto i = queue.front();
        queue.pop_front();
        if (i == top()) return true;
        for (std::size_t j = 0; j < m; ++j) {
            if (visited[j] || !(strong ? strongly_normal_in(i, j) : normal_in(i, j))) continue;
            visited[j] = true;
            queue.push_back(j);
        }
    }
    return false;
}

std::vector<std::size_t> ClosedSubsetLattice::maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < members_.size(); ++i) {
        bool is_max = true;
        for (std::size_t j = i + 1; j < top() && is_max; ++j)
            if (j != i && contained(i, j) && members_[j].size() > members_[i].size()) is_max = false;
        if (is_max) out.push_back(i);
    }
    return out;
}

bool is_subnormal(const ClosedSubsetLattice& lattice, ElementSet f) {
    auto i = lattice.find(f);
    if (!i) throw NotClosed{f};
    return lattice.is_subnormal(*i);
}

bool is_strongly_subnormal(const ClosedSubsetLattice& lattice, ElementSet f) {
    auto i = lattice.find(f);
    if (!i) throw NotClosed{f};
    return lattice.is_strongly_subnormal(*i);
}

ElementSet centralizer(const Hypergroup& h, ElementSet f) {
    ElementSet out;
    for (Element x = 0; x < h.order(); ++x) {
        bool commutes = true;
        for (auto y : f) commutes = commutes && h.product(x, y) == h.product(y, x);
        if (commutes) out.insert(x);
    }
    return out;
}

ElementSet center(const Hypergroup& h) { return centralizer(h, h.elements()); }

ClosedSubset closed_center(const Hypergroup& h) {
    const auto z = center(h);
    ElementSet zs;
    for (auto x : z)
        if (z.contains(h.star(x))) zs.insert(x);
    auto c = ClosedSubset::make(h, zs);
    if (!c.normal()) throw InternalMismatch("closed center {" + zs.to_string() + "} is not normal");
    return c;
}

ElementSet strong_normalizer(const Hypergroup& h, ElementSet f) {
    ElementSet out;
    for (Element x = 0; x < h.order(); ++x) {
        const auto conj = h.set_product(h.set_product(ElementSet::singleton(h.star(x)), f), ElementSet::singleton(x));
        if (conj.subset_of(f)) out.insert(x);
    }
    return out;
}

std::vector<ClosedSubset> maximal_closed_subsets(const ClosedSubsetLattice& lattice) {
    std::vector<ClosedSubset> out;
    for (auto i : lattice.maximal()) out.push_back(lattice[i]);
    return out;
}

std::vector<ClosedSubset> maximal_closed_subsets(const Hypergroup& h) {
    return maximal_closed_subsets(ClosedSubsetLattice{h});
}

ElementSet SubHypergroup::to_sub(ElementSet parent_set) const {
    ElementSet out;
    for (auto x : parent_set)
        if (from_parent[x] >= 0) out.insert(static_cast<Element>(from_parent[x]));
    return out;
}

ElementSet SubHypergroup::to_parent_set(ElementSet sub_set) const {
    ElementSet out;
    for (auto x : sub_set) out.insert(to_parent[x]);
    return out;
}

SubHypergroup restrict_to(const Hypergroup& h, ElementSet closed) {
    if (!is_closed(h, closed)) throw NotClosed{closed};
    std::vector<Element> to_parent = closed.members();
    std::vector<int> from_parent(h.order(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = static_cast<int>(i);
    const auto k = to_parent.size();
    std::vector<ElementSet> table(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            ElementSet cell;
            for (auto x : h.product(to_parent[a], to_parent[b])) cell.insert(static_cast<Element>(from_parent[x]));
            table[a * k + b] = cell;
        }
    return SubHypergroup{Hypergroup::validate(k, std::move(table)), std::move(to_parent), std::move(from_parent)};
}

} // namespace hyperalg
