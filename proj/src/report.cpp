#include "hyperalg/report.hpp"

namespace hyperalg {

const std::string* AnalysisReport::get(std::string_view key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

AnalysisReport make_report(const Analysis& a, std::string_view name) {
    const auto& h = a.hypergroup();
    const auto& lattice = a.lattice();
    AnalysisReport r{std::string(name), {}, 0};
    auto put = [&r](std::string key, std::string value) { r.fields.emplace_back(std::move(key), std::move(value)); };

    put("name", std::string(name));
    put("axioms", "ok");
    put("order", std::to_string(h.order()));
    put("thin", yes_no(is_thin(h)));
    put("thin_part", a.thin_part().to_string());
    put("star", [&] {
        std::string s;
        for (Element x = 0; x < h.order(); ++x) s += (x ? "," : "") + std::to_string(h.star(x));
        return s;
    }());

    std::size_t normal = 0, strongly = 0;
    for (const auto& f : lattice.members()) {
        normal += f.normal();
        strongly += f.strongly_normal();
    }
    put("closed_subsets", std::to_string(lattice.size()));
    put("normal_closed_subsets", std::to_string(normal));
    put("strongly_normal_closed_subsets", std::to_string(strongly));

    const auto& lcs = a.lower_central();
    for (std::size_t s = 0; s < lcs.terms.size(); ++s)
        put("lower_central." + std::to_string(s + 1), lcs.terms[s].to_string());
    put("nilpotent", yes_no(a.nilpotent()));
    put("nilpotency_class", a.nilpotent() ? std::to_string(lcs.nilpotency_class()) : "-");

    put("center", a.center().to_string());
    put("closed_center", a.closed_center().to_string());
    const auto& zs = a.center_series();
    for (std::size_t i = 0; i < zs.terms.size(); ++i)
        put("closed_center_series." + std::to_string(i), zs.terms[i].to_string());
    put("inv_hypercenter", zs.hypercenter().to_string());
    put("thin_residue", a.thin_residue().to_string());

    put("solvable", yes_no(a.solvable().has_value()));
    if (a.solvable())
        for (std::size_t i = 0; i < a.solvable()->steps.size(); ++i)
            put("solvable.chain." + std::to_string(i), a.solvable()->steps[i].subset.to_string());

    put("rt", yes_no(a.rt().has_value()));
    if (a.rt()) {
        put("valency", std::to_string(a.rt()->valency));
        std::uint64_t prime = 0;
        std::size_t k = 0;
        for (const auto& s : a.rt()->sylow) {
            k = s.prime == prime ? k + 1 : 0;
            prime = s.prime;
            put("sylow." + std::to_string(s.prime) + "." + std::to_string(k), s.subset.to_string());
        }
        put("non_rt_closed_subsets", std::to_string(a.rt()->non_rt_subsets.size()));
    }

    for (const auto& s : statement_catalog()) {
        const auto v = verify_statement(s.id, a);
        r.violated += v.outcome == Outcome::violated;
        put("verify." + std::string(s.id), to_string(v.outcome));
        if (v.outcome == Outcome::violated) put("verify." + std::string(s.id) + ".witness", v.witness);
    }

    if (a.nilpotent() && !a.solvable()) throw InternalMismatch("report: nilpotent but no solvability chain");
    if (a.solvable() && a.solvable()->steps.back().subset != h.elements())
        throw InternalMismatch("report: solvability chain does not end at H");
    if (!is_strongly_normal(h, a.thin_residue())) throw InternalMismatch("report: thin residue not strongly normal");
    return r;
}

std::string render_machine(const AnalysisReport& r) {
    std::string out;
    for (const auto& [k, v] : r.fields) out += k + " = " + v + "\n";
    return out;
}

std::string render_text(const AnalysisReport& r) {
    std::string out;
    std::string section;
    for (const auto& [k, v] : r.fields) {
        const auto dot = k.find('.');
        const auto head = dot == std::string::npos ? std::string{} : k.substr(0, dot);
        if (head != section) {
            section = head;
            if (!head.empty()) out += head + ":\n";
        }
        if (head.empty())
            out += k + ": " + v + "\n";
        else
            out += "  " + k.substr(dot + 1) + ": " + v + "\n";
    }
    if (r.violated) out += "!! " + std::to_string(r.violated) + " statement(s) VIOLATED\n";
    return out;
}

} // namespace hyperalg
