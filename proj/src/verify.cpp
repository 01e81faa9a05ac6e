#include "hyperalg/verify.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <unordered_set>

namespace hyperalg {

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::hypothesis_not_met: return "hypothesis-not-met";
    case Outcome::violated: return "VIOLATED";
    }
    return "?";
}

const std::vector<StatementInfo>& statement_catalog() {
    static const std::vector<StatementInfo> catalog{
        {"thm-center", "nilpotent => Z*_n(H) = H for some n"},
        {"thm-ct", "Z*_n(H) = H => H//O^theta(H) nilpotent"},
        {"thm-strongly", "nilpotent => every closed E != 1 strongly subnormal"},
        {"thm-ns", "nilpotent => solvable"},
        {"prop-s", "nilpotent => every closed subset nilpotent"},
        {"prop-nq", "nilpotent => H//F nilpotent for normal closed F"},
        {"lem-cq", "[C//F, D//F] = [C,D]F//F for normal closed F"},
        {"cor-n", "(H//F)_s = H_s F//F for normal closed F"},
        {"lem-cen", "[H,F] = 1 => F commutes elementwise with H"},
        {"lem-qu", "O^theta(H)F//F = O^theta(H//F) for normal closed F"},
        {"lem-sn", "S_{H//K}(F//K) = S_H(F)//K for closed K in F"},
        {"lem-main1", "Z*_n(H) normal closed"},
        {"lem-com", "H_n strongly normal closed"},
        {"lem-basic", "a** = a, (ab)* = b*a*, (AB)* = B*A*"},
        {"lem-inv", "1 in pq <=> q = p*; 1s = s; unique identity"},
        {"cor-abel", "ab = ba <=> 1 in [a,b] <=> a in C(b) and b in C(a)"},
        {"lem-closed", "closed <=> (1 in A, A* = A, AA = A); Fh = hF for normal F"},
        {"lem-thin-residue", "O^theta(H) = [H,1], strongly normal"},
        {"lem-normal", "F//N normal in H//N <=> F normal in H"},
        {"lem-qinv", "(h^F)* = (h*)^F"},
        {"lem-de", "<A> = union of A^n; h*Ah in <A> => h*<A>h in <A>"},
        {"lem-strong", "F strongly normal <=> H//F thin"},
    };
    return catalog;
}

namespace {

std::string set_str(ElementSet s) { return "{" + s.to_string() + "}"; }

Verdict holds() { return {}; }
Verdict not_met() { return {Outcome::hypothesis_not_met, {}}; }
Verdict violated(std::string w) { return {Outcome::violated, std::move(w)}; }

ElementSet conj(const Hypergroup& h, Element x, ElementSet f) {
    return h.set_product(h.set_product(ElementSet::singleton(h.star(x)), f), ElementSet::singleton(x));
}

/// All subsets for small orders; otherwise lattice members, {x, x*} pairs and a
/// fixed pseudo-random sample.
std::vector<ElementSet> subset_sample(const Analysis& a, std::size_t exhaustive_up_to, std::size_t random_count) {
    const auto& h = a.hypergroup();
    const auto n = h.order();
    std::vector<ElementSet> out;
    if (n <= exhaustive_up_to) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.emplace_back(bits);
        return out;
    }
    for (const auto& f : a.lattice().members()) out.push_back(f.members());
    for (Element x = 0; x < n; ++x) out.push_back(ElementSet::of({x, h.star(x)}));
    std::mt19937_64 rng{0x6879706572ULL + n};
    for (std::size_t k = 0; k < random_count; ++k) out.emplace_back(rng() & ElementSet::full(n).bits());
    return out;
}

std::vector<std::size_t> normal_members(const ClosedSubsetLattice& lattice) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice[i].normal()) out.push_back(i);
    return out;
}

Verdict check_basic(const Analysis& a) {
    const auto& h = a.hypergroup();
    const auto n = h.order();
    for (Element x = 0; x < n; ++x)
        if (h.star(h.star(x)) != x) return violated("a=" + std::to_string(x) + " a**!=a");
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (h.set_star(h.product(x, y)) != h.product(h.star(y), h.star(x)))
                return violated("a=" + std::to_string(x) + " b=" + std::to_string(y) + " (ab)*!=b*a*");
    const auto sample = subset_sample(a, 6, 48);
    for (auto p : sample)
        for (auto q : sample)
            if (h.set_star(h.set_product(p, q)) != h.set_product(h.set_star(q), h.set_star(p)))
                return violated("A=" + set_str(p) + " B=" + set_str(q) + " (AB)*!=B*A*");
    return holds();
}

Verdict check_inv(const Analysis& a) {
    const auto& h = a.hypergroup();
    const auto n = h.order();
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q) {
            const bool one_in = h.product(p, q).contains(0);
            if (one_in != (q == h.star(p)) || one_in != (p == h.star(q)))
                return violated("p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    for (Element s = 0; s < n; ++s)
        if (h.product(0, s) != ElementSet::singleton(s)) return violated("1s!=s at s=" + std::to_string(s));
    for (Element e = 1; e < n; ++e) {
        bool neutral = true;
        for (Element s = 0; s < n && neutral; ++s) neutral = h.product(s, e) == ElementSet::singleton(s);
        if (neutral) return violated("second neutral element " + std::to_string(e));
    }
    return holds();
}

Verdict check_abel(const Analysis& a) {
    const auto& h = a.hypergroup();
    for (Element x = 0; x < h.order(); ++x)
        for (Element y = 0; y < h.order(); ++y) {
            const bool commute = h.product(x, y) == h.product(y, x);
            const bool one_in = commutator_elements(h, x, y).contains(0);
            const bool mutual = centralizer(h, ElementSet::singleton(y)).contains(x) &&
                                centralizer(h, ElementSet::singleton(x)).contains(y);
            if (commute != one_in || commute != mutual)
                return violated("a=" + std::to_string(x) + " b=" + std::to_string(y) + ": ab=" +
                                set_str(h.product(x, y)) + " ba=" + set_str(h.product(y, x)) + " [a,b]=" +
                                set_str(commutator_elements(h, x, y)));
        }
    return holds();
}

Verdict check_closed(const Analysis& a) {
    const auto& h = a.hypergroup();
    for (auto s : subset_sample(a, 12, 1024)) {
        if (s.empty()) continue;
        const bool by_definition = h.set_product(h.set_star(s), s).subset_of(s);
        const bool by_parts = s.contains(0) && h.set_star(s) == s && h.set_product(s, s) == s;
        if (by_definition != by_parts) return violated("A=" + set_str(s));
    }
    for (const auto& f : a.lattice().members()) {
        if (!f.normal()) continue;
        for (Element x = 0; x < h.order(); ++x)
            if (h.set_product(f.members(), ElementSet::singleton(x)) !=
                h.set_product(ElementSet::singleton(x), f.members()))
                return violated("F=" + set_str(f.members()) + " h=" + std::to_string(x) + " Fh!=hF");
    }
    return holds();
}

Verdict check_cen(const Analysis& a) {
    const auto& h = a.hypergroup();
    bool any = false;
    for (const auto& f : a.lattice().members()) {
        if (commutator_subset(h, h.elements(), f.members()).members() != ElementSet::singleton(0)) continue;
        any = true;
        for (Element x = 0; x < h.order(); ++x)
            for (auto y : f.members())
                if (h.product(x, y) != h.product(y, x))
                    return violated("F=" + set_str(f.members()) + " h=" + std::to_string(x) + " f=" + std::to_string(y));
    }
    return any ? holds() : not_met();
}

Verdict check_thin_residue(const Analysis& a) {
    const auto& h = a.hypergroup();
    auto meet = h.elements();
    for (const auto& f : a.lattice().members())
        if (f.strongly_normal()) meet &= f.members();
    const auto bracket = commutator_subset(h, h.elements(), ElementSet::singleton(0)).members();
    if (meet != bracket) return violated("intersection=" + set_str(meet) + " [H,1]=" + set_str(bracket));
    if (!is_strongly_normal(h, meet)) return violated("thin residue " + set_str(meet) + " not strongly normal");
    return holds();
}

Verdict check_normal(const Analysis& a) {
    const auto& lat = a.lattice();
    for (auto ni : normal_members(lat)) {
        const auto& q = a.quotient(ni);
        for (std::size_t fi = 0; fi < lat.size(); ++fi) {
            if (!lat.contained(ni, fi)) continue;
            const bool in_quotient = is_normal(q.induced, project_subset(q, lat[fi].members()));
            if (in_quotient != lat[fi].normal())
                return violated("N=" + set_str(lat[ni].members()) + " F=" + set_str(lat[fi].members()));
        }
    }
    return holds();
}

Verdict check_qinv(const Analysis& a) {
    const auto& h = a.hypergroup();
    for (std::size_t fi = 0; fi < a.lattice().size(); ++fi) {
        const auto& q = a.quotient(fi);
        for (Element x = 0; x < h.order(); ++x)
            if (q.induced.star(q.block_of[x]) != q.block_of[h.star(x)])
                return violated("F=" + set_str(q.kernel) + " h=" + std::to_string(x));
    }
    return holds();
}

ElementSet union_of_powers(const Hypergroup& h, ElementSet a) {
    auto acc = ElementSet::singleton(0);
    auto power = ElementSet::singleton(0);
    std::unordered_set<std::uint64_t> seen{power.bits()};
    for (;;) {
        power = h.set_product(power, a);
        if (!seen.insert(power.bits()).second) return acc;
        acc |= power;
    }
}

Verdict check_de(const Analysis& a) {
    const auto& h = a.hypergroup();
    for (auto s : subset_sample(a, 10, 256)) {
        s = s | h.set_star(s);
        if (s.empty()) continue;
        const auto generated = closure_of(h, s);
        auto meet = h.elements();
        for (const auto& f : a.lattice().members())
            if (s.subset_of(f.members())) meet &= f.members();
        const auto powers = union_of_powers(h, s);
        if (generated != meet || generated != powers)
            return violated("A=" + set_str(s) + " closure=" + set_str(generated) + " meet=" + set_str(meet) +
                            " powers=" + set_str(powers));
        for (Element x = 0; x < h.order(); ++x)
            if (conj(h, x, s).subset_of(generated) && !conj(h, x, generated).subset_of(generated))
                return violated("A=" + set_str(s) + " h=" + std::to_string(x));
    }
    return holds();
}

Verdict check_strong(const Analysis& a) {
    for (std::size_t fi = 0; fi < a.lattice().size(); ++fi)
        if (quotient_is_thin(a.quotient(fi)) != a.lattice()[fi].strongly_normal())
            return violated("F=" + set_str(a.lattice()[fi].members()));
    return holds();
}

Verdict check_qu(const Analysis& a) {
    const auto& h = a.hypergroup();
    for (auto ni : normal_members(a.lattice())) {
        const auto& q = a.quotient(ni);
        const auto pushed = project_subset(q, h.set_product(a.thin_residue(), q.kernel));
        const auto residue = thin_residue(q.induced).members();
        if (pushed != residue)
            return violated("F=" + set_str(q.kernel) + " O(H)F//F=" + set_str(pushed) + " O(H//F)=" + set_str(residue));
    }
    return holds();
}

Verdict check_main1(const Analysis& a) {
    const auto& h = a.hypergroup();
    const auto& terms = a.center_series().terms;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!is_closed(h, terms[i]) || !is_normal(h, terms[i]))
            return violated("Z*_" + std::to_string(i) + "=" + set_str(terms[i]));
        if (i == 0) continue;
        const auto q = build_quotient(h, terms[i - 1]);
        if (project_subset(q, terms[i]) != closed_center(q.induced).members())
            return violated("Z*_" + std::to_string(i) + "//Z*_" + std::to_string(i - 1) + " is not the closed center");
    }
    return holds();
}

Verdict check_com(const Analysis& a) {
    const auto& h = a.hypergroup();
    const auto& terms = a.lower_central().terms;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!is_closed(h, terms[i]) || !is_strongly_normal(h, terms[i]))
            return violated("H_" + std::to_string(i + 1) + "=" + set_str(terms[i]));
    return holds();
}

Verdict check_cq(const Analysis& a) {
    const auto& h = a.hypergroup();
    const auto& lat = a.lattice();
    for (auto ni : normal_members(lat)) {
        const auto& q = a.quotient(ni);
        for (const auto& c : lat.members())
            for (const auto& d : lat.members()) {
                const auto in_quotient = commutator_subset(q.induced, project_subset(q, c.members()),
                                                           project_subset(q, d.members()))
                                             .members();
                const auto pushed =
                    project_subset(q, h.set_product(commutator_subset(h, c.members(), d.members()).members(), q.kernel));
                if (in_quotient != pushed)
                    return violated("F=" + set_str(q.kernel) + " C=" + set_str(c.members()) +
                                    " D=" + set_str(d.members()));
            }
    }
    return holds();
}

Verdict check_n(const Analysis& a) {
    const auto& h = a.hypergroup();
    for (auto ni : normal_members(a.lattice())) {
        const auto& q = a.quotient(ni);
        const auto series = lower_central_series(q.induced);
        const auto depth = std::max(series.terms.size(), a.lower_central().terms.size()) + 1;
        for (std::size_t s = 1; s <= depth; ++s) {
            const auto pushed = project_subset(q, h.set_product(a.lower_central().term(s), q.kernel));
            if (series.term(s) != pushed)
                return violated("F=" + set_str(q.kernel) + " s=" + std::to_string(s));
        }
    }
    return holds();
}

Verdict check_sn(const Analysis& a) {
    const auto& h = a.hypergroup();
    const auto& lat = a.lattice();
    for (std::size_t ki = 0; ki < lat.size(); ++ki) {
        const auto& q = a.quotient(ki);
        for (std::size_t fi = 0; fi < lat.size(); ++fi) {
            if (!lat.contained(ki, fi)) continue;
            const auto in_quotient = strong_normalizer(q.induced, project_subset(q, lat[fi].members()));
            const auto pushed = project_subset(q, strong_normalizer(h, lat[fi].members()));
            if (in_quotient != pushed)
                return violated("K=" + set_str(lat[ki].members()) + " F=" + set_str(lat[fi].members()));
        }
    }
    return holds();
}

Verdict check_center(const Analysis& a) {
    if (!a.nilpotent()) return not_met();
    if (a.center_series().hypercenter() != a.hypergroup().elements())
        return violated("nilpotent but Z*_inf=" + set_str(a.center_series().hypercenter()));
    return holds();
}

Verdict check_ct(const Analysis& a) {
    const auto& h = a.hypergroup();
    if (a.center_series().hypercenter() != h.elements()) return not_met();
    const auto q = build_quotient(h, a.thin_residue());
    if (!lower_central_series(q.induced).nilpotent())
        return violated("Z*_inf=H but H//O^theta(H) with O^theta=" + set_str(a.thin_residue()) + " not nilpotent");
    return holds();
}

Verdict check_strongly(const Analysis& a) {
    if (!a.nilpotent()) return not_met();
    const auto& lat = a.lattice();
    for (std::size_t i = 1; i < lat.size(); ++i)
        if (!lat.is_strongly_subnormal(i)) return violated("E=" + set_str(lat[i].members()) + " not strongly subnormal");
    return holds();
}

Verdict check_ns(const Analysis& a) {
    if (!a.nilpotent()) return not_met();
    if (!a.solvable()) return violated("nilpotent but no solvable chain");
    const auto& steps = a.solvable()->steps;
    if (steps.front().subset != ElementSet::singleton(0) || steps.back().subset != a.hypergroup().elements())
        return violated("solvable chain has wrong endpoints");
    for (std::size_t k = 1; k < steps.size(); ++k)
        if (!is_prime(steps[k].quotient_order)) return violated("non-prime step in solvable chain");
    return holds();
}

Verdict check_s(const Analysis& a) {
    if (!a.nilpotent()) return not_met();
    for (const auto& f : a.lattice().members()) {
        const auto sub = restrict_to(a.hypergroup(), f.members());
        if (!lower_central_series(sub.sub).nilpotent()) return violated("F=" + set_str(f.members()) + " not nilpotent");
    }
    return holds();
}

Verdict check_nq(const Analysis& a) {
    if (!a.nilpotent()) return not_met();
    for (auto ni : normal_members(a.lattice()))
        if (!lower_central_series(a.quotient(ni).induced).nilpotent())
            return violated("F=" + set_str(a.lattice()[ni].members()) + " H//F not nilpotent");
    return holds();
}

using Check = Verdict (*)(const Analysis&);

Check lookup(std::string_view id) {
    static const std::vector<std::pair<std::string_view, Check>> table{
        {"thm-center", check_center}, {"thm-ct", check_ct},       {"thm-strongly", check_strongly},
        {"thm-ns", check_ns},         {"prop-s", check_s},        {"prop-nq", check_nq},
        {"lem-cq", check_cq},         {"cor-n", check_n},         {"lem-cen", check_cen},
        {"lem-qu", check_qu},         {"lem-sn", check_sn},       {"lem-main1", check_main1},
        {"lem-com", check_com},       {"lem-basic", check_basic}, {"lem-inv", check_inv},
        {"cor-abel", check_abel},     {"lem-closed", check_closed}, {"lem-thin-residue", check_thin_residue},
        {"lem-normal", check_normal}, {"lem-qinv", check_qinv},   {"lem-de", check_de},
        {"lem-strong", check_strong},
    };
    for (const auto& [name, fn] : table)
        if (name == id) return fn;
    throw UnknownStatement{id};
}

} // namespace

Verdict verify_statement(std::string_view id, const Analysis& a) {
    const auto check = lookup(id);
    try {
        return check(a);
    } catch (const InternalMismatch& e) {
        return violated(e.what());
    }
}

Verdict verify_statement(std::string_view id, const Hypergroup& h) {
    lookup(id);
    return verify_statement(id, Analysis{h});
}

} // namespace hyperalg
