#include "hyperalg/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperalg {

void check_group(const CayleyTable& g) {
    const auto n = g.order;
    if (n == 0 || n > ElementSet::max_order) throw NotAGroup(g.name + ": order must be in 1..64");
    if (g.mul.size() != n * n) throw NotAGroup(g.name + ": table must have order^2 entries");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (g.at(a, b) >= n)
                throw NotAGroup(g.name + ": entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    Element e = 0;
    bool found = false;
    for (Element c = 0; c < n && !found; ++c) {
        bool neutral = true;
        for (Element a = 0; a < n && neutral; ++a) neutral = g.at(c, a) == a && g.at(a, c) == a;
        if (neutral) {
            e = c;
            found = true;
        }
    }
    if (!found) throw NotAGroup(g.name + ": no identity element");
    for (Element a = 0; a < n; ++a) {
        bool inverse = false;
        for (Element b = 0; b < n && !inverse; ++b) inverse = g.at(a, b) == e && g.at(b, a) == e;
        if (!inverse) throw NotAGroup(g.name + ": element " + std::to_string(a) + " has no inverse");
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
                    throw NotAGroup(g.name + ": not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
}

Hypergroup from_group(const CayleyTable& g) {
    check_group(g);
    const auto n = g.order;
    Element e = 0;
    while (g.at(e, e) != e) ++e;
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Element{0});
    std::swap(relabel[0], relabel[e]);
    std::vector<ElementSet> table(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            table[relabel[a] * n + relabel[b]] = ElementSet::singleton(relabel[g.at(a, b)]);
    return Hypergroup::validate(n, std::move(table));
}

namespace {

template <typename F>
CayleyTable tabulate(std::string name, std::size_t n, F&& mul) {
    CayleyTable g{std::move(name), n, std::vector<Element>(n * n)};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) g.mul[a * n + b] = static_cast<Element>(mul(a, b));
    return g;
}

CayleyTable cyclic(std::size_t n) {
    return tabulate("C" + std::to_string(n), n, [n](Element a, Element b) { return (a + b) % n; });
}

CayleyTable direct_product(std::string name, const CayleyTable& x, const CayleyTable& y) {
    const auto m = y.order;
    return tabulate(std::move(name), x.order * m, [&](Element a, Element b) {
        return x.at(a / m, b / m) * m + y.at(a % m, b % m);
    });
}

/// C_n extended by an element of order k acting by inversion when its exponent
/// is odd; index = t * n + r. k = 2 gives dihedral groups, n = 3, k = 4 gives Dic3.
CayleyTable inverting_extension(std::string name, std::size_t n, std::size_t k) {
    return tabulate(std::move(name), n * k, [n, k](Element a, Element b) {
        const auto r1 = a % n, t1 = a / n, r2 = b % n, t2 = b / n;
        const auto r = (t1 % 2 == 0) ? (r1 + r2) % n : (r1 + n - r2) % n;
        return ((t1 + t2) % k) * n + r;
    });
}

CayleyTable quaternion() {
    // index = 4 * sign + unit, units 0..3 = 1, i, j, k
    struct Signed {
        unsigned sign;
        unsigned unit;
    };
    static constexpr Signed units[4][4] = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
        {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
    };
    return tabulate("Q8", 8, [](Element a, Element b) {
        const auto p = units[a % 4][b % 4];
        return ((a / 4) ^ (b / 4) ^ p.sign) * 4 + p.unit;
    });
}

using Perm = std::vector<unsigned>;

CayleyTable permutation_group(std::string name, std::size_t degree, const std::vector<Perm>& gens) {
    Perm identity(degree);
    std::iota(identity.begin(), identity.end(), 0U);
    std::vector<Perm> elements{identity};
    std::map<Perm, Element> index{{identity, 0}};
    for (std::size_t at = 0; at < elements.size(); ++at)
        for (const auto& g : gens) {
            Perm p(degree);
            for (std::size_t x = 0; x < degree; ++x) p[x] = elements[at][g[x]];
            if (index.emplace(p, static_cast<Element>(elements.size())).second) elements.push_back(std::move(p));
        }
    return tabulate(std::move(name), elements.size(), [&](Element a, Element b) {
        Perm p(degree);
        for (std::size_t x = 0; x < degree; ++x) p[x] = elements[a][elements[b][x]];
        return index.at(p);
    });
}

std::vector<CayleyTable> all_builtin() {
    const auto c2 = cyclic(2);
    const auto c3 = cyclic(3);
    std::vector<CayleyTable> out{
        cyclic(2),
        cyclic(3),
        cyclic(4),
        direct_product("V4", c2, c2),
        cyclic(5),
        cyclic(6),
        inverting_extension("S3", 3, 2),
        cyclic(7),
        cyclic(8),
        direct_product("C4xC2", cyclic(4), c2),
        direct_product("C2^3", direct_product("V4", c2, c2), c2),
        inverting_extension("D4", 4, 2),
        quaternion(),
        cyclic(9),
        direct_product("C3^2", c3, c3),
        cyclic(10),
        inverting_extension("D5", 5, 2),
        cyclic(11),
        cyclic(12),
        direct_product("C2xC6", c2, cyclic(6)),
        inverting_extension("D6", 6, 2),
        permutation_group("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}),
        inverting_extension("Dic3", 3, 4),
        permutation_group("A5", 5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}),
    };
    return out;
}

} // namespace

std::vector<CayleyTable> builtin_groups(std::size_t max_order) {
    std::vector<CayleyTable> out;
    for (auto& g : all_builtin()) {
        if (g.order > max_order) continue;
        check_group(g);
        out.push_back(std::move(g));
    }
    return out;
}

CayleyTable builtin_group(std::string_view name) {
    for (auto& g : all_builtin())
        if (g.name == name) {
            check_group(g);
            return g;
        }
    throw std::invalid_argument("unknown builtin group: " + std::string(name));
}

} // namespace hyperalg
