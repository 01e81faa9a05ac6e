#pragma once

// Plain group theory on a Cayley table, for cross-checking the hypergroup
// machinery on thin imports. Shares only the CayleyTable data type with the
// library. Subsets are bit masks over the table's own labels.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hyperalg/groups.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Group {
    explicit Group(const hyperalg::CayleyTable& t) : n{t.order}, mul{t.mul} {
        for (unsigned c = 0; c < n; ++c) {
            bool neutral = true;
            for (unsigned a = 0; a < n; ++a) neutral = neutral && op(c, a) == a && op(a, c) == a;
            if (neutral) e = c;
        }
        inv.resize(n);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                if (op(a, b) == e) inv[a] = b;
    }

    [[nodiscard]] unsigned op(unsigned a, unsigned b) const { return mul[a * n + b]; }
    [[nodiscard]] Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
    [[nodiscard]] Mask identity() const { return Mask{1} << e; }

    /// Subgroup generated by a set: repeated multiplication from {e}.
    [[nodiscard]] Mask generate(Mask gens) const {
        Mask s = identity() | gens;
        for (bool grew = true; grew;) {
            grew = false;
            for (unsigned a = 0; a < n; ++a)
                if (s >> a & 1)
                    for (unsigned b = 0; b < n; ++b)
                        if ((s >> b & 1) && !(s >> op(a, b) & 1)) {
                            s |= Mask{1} << op(a, b);
                            grew = true;
                        }
        }
        return s;
    }

    [[nodiscard]] bool is_subgroup(Mask s) const {
        if (!(s & identity())) return false;
        for (unsigned a = 0; a < n; ++a)
            if (s >> a & 1)
                for (unsigned b = 0; b < n; ++b)
                    if ((s >> b & 1) && !(s >> op(a, b) & 1)) return false;
        return true;
    }

    /// Every subset containing e tested for closure. Small orders only.
    [[nodiscard]] std::set<Mask> subgroups_brute() const {
        std::set<Mask> out;
        for (Mask s = 0; s < (Mask{1} << n); ++s)
            if (is_subgroup(s)) out.insert(s);
        return out;
    }

    /// Grows subgroups one generator at a time from {e}; complete because
    /// every subgroup is reached by adding its elements one by one.
    [[nodiscard]] std::set<Mask> subgroups_by_generation() const {
        std::set<Mask> out{identity()};
        std::vector<Mask> frontier{identity()};
        while (!frontier.empty()) {
            std::vector<Mask> next;
            for (auto k : frontier)
                for (unsigned x = 0; x < n; ++x)
                    if (!(k >> x & 1))
                        if (const auto g = generate(k | Mask{1} << x); out.insert(g).second) next.push_back(g);
            frontier = std::move(next);
        }
        return out;
    }

    [[nodiscard]] Mask center() const {
        Mask z = 0;
        for (unsigned a = 0; a < n; ++a) {
            bool central = true;
            for (unsigned b = 0; b < n; ++b) central = central && op(a, b) == op(b, a);
            if (central) z |= Mask{1} << a;
        }
        return z;
    }

    [[nodiscard]] unsigned commutator(unsigned a, unsigned b) const { return op(op(inv[a], inv[b]), op(a, b)); }

    [[nodiscard]] Mask commutator_subgroup(Mask a, Mask b) const {
        Mask gens = 0;
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y)
                if ((a >> x & 1) && (b >> y & 1)) gens |= Mask{1} << commutator(x, y);
        return generate(gens);
    }

    /// G_1 = G, G_{k+1} = [G_k, G] until stable.
    [[nodiscard]] std::vector<Mask> lower_central() const {
        std::vector<Mask> s{all()};
        for (;;) {
            const auto next = commutator_subgroup(s.back(), all());
            if (next == s.back()) return s;
            s.push_back(next);
        }
    }

    [[nodiscard]] std::vector<Mask> derived() const {
        std::vector<Mask> s{all()};
        for (;;) {
            const auto next = commutator_subgroup(s.back(), s.back());
            if (next == s.back()) return s;
            s.push_back(next);
        }
    }

    [[nodiscard]] bool nilpotent() const { return lower_central().back() == identity(); }
    [[nodiscard]] bool solvable() const { return derived().back() == identity(); }
    /// Least c with G_{c+1} = 1.
    [[nodiscard]] std::size_t nilpotency_class() const { return lower_central().size() - 1; }

    [[nodiscard]] bool normal(Mask k) const {
        for (unsigned g = 0; g < n; ++g)
            for (unsigned x = 0; x < n; ++x)
                if ((k >> x & 1) && !(k >> op(op(inv[g], x), g) & 1)) return false;
        return true;
    }

    /// Upper central series Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i), until stable.
    [[nodiscard]] std::vector<Mask> upper_central() const {
        std::vector<Mask> s{identity()};
        for (;;) {
            const auto z = s.back();
            Mask next = 0;
            for (unsigned a = 0; a < n; ++a) {
                bool central = true;
                for (unsigned b = 0; b < n; ++b) central = central && (z >> commutator(a, b) & 1);
                if (central) next |= Mask{1} << a;
            }
            if (next == z) return s;
            s.push_back(next);
        }
    }

    std::size_t n;
    std::vector<unsigned> mul;
    unsigned e = 0;
    std::vector<unsigned> inv;
};

inline unsigned popcount(Mask m) { return static_cast<unsigned>(__builtin_popcountll(m)); }

/// Maps a mask over table labels to hypergroup labels, where the import
/// swaps the identity with label 0.
inline Mask to_import_labels(const Group& g, Mask m) {
    if (g.e == 0) return m;
    const auto at_e = m >> g.e & 1, at_0 = m & 1;
    m &= ~(Mask{1} << g.e | Mask{1});
    return m | at_e | at_0 << g.e;
}

} // namespace oracle
