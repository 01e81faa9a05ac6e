#include "hyperalg/hypergroup.hpp"

#include <sstream>

namespace hyperalg {

const char* to_string(AxiomFailure f) {
    switch (f) {
    case AxiomFailure::none: return "ok";
    case AxiomFailure::index_out_of_range: return "IndexOutOfRange";
    case AxiomFailure::empty_product: return "EmptyProduct";
    case AxiomFailure::identity_violation: return "IdentityViolation";
    case AxiomFailure::no_inverse: return "NoInverse";
    case AxiomFailure::ambiguous_inverse: return "AmbiguousInverse";
    case AxiomFailure::assoc_violation: return "AssocViolation";
    case AxiomFailure::exchange_violation: return "ExchangeViolation";
    }
    return "?";
}

std::string AxiomReport::describe() const {
    std::ostringstream os;
    os << to_string(failure);
    switch (failure) {
    case AxiomFailure::none: return os.str();
    case AxiomFailure::index_out_of_range:
    case AxiomFailure::empty_product: os << "(" << i << "," << j << ")"; break;
    case AxiomFailure::identity_violation:
    case AxiomFailure::no_inverse:
    case AxiomFailure::ambiguous_inverse: os << "(" << i << ")"; break;
    case AxiomFailure::assoc_violation:
    case AxiomFailure::exchange_violation: os << "(" << i << "," << j << "," << k << ")"; break;
    }
    os << " violations=" << violations;
    return os.str();
}

namespace {

class StageCounter {
  public:
    StageCounter(AxiomReport& report, CheckDepth depth) : report_{report}, depth_{depth} {}

    // Returns true when the caller should stop scanning.
    bool hit(AxiomFailure f, Element i, Element j = 0, Element k = 0) {
        if (report_.violations++ == 0) {
            report_.failure = f;
            report_.i = i;
            report_.j = j;
            report_.k = k;
        }
        return depth_ == CheckDepth::first_witness;
    }
    [[nodiscard]] bool failed() const { return report_.violations > 0; }

  private:
    AxiomReport& report_;
    CheckDepth depth_;
};

ElementSet row_product(std::span<const ElementSet> table, std::size_t n, Element a, ElementSet q) {
    ElementSet out;
    for (auto x : q) out |= table[a * n + x];
    return out;
}

ElementSet column_product(std::span<const ElementSet> table, std::size_t n, ElementSet p, Element b) {
    ElementSet out;
    for (auto y : p) out |= table[y * n + b];
    return out;
}

} // namespace

AxiomReport check_axioms(std::size_t n, std::span<const ElementSet> table, CheckDepth depth) {
    if (n == 0 || n > ElementSet::max_order) throw std::invalid_argument("order must be in 1..64");
    if (table.size() != n * n) throw std::invalid_argument("table must have order^2 cells");

    AxiomReport report;
    StageCounter stage{report, depth};
    const auto all = ElementSet::full(n);
    auto cell = [&](Element a, Element b) { return table[a * n + b]; };

    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) {
            if (!cell(i, j).subset_of(all) && stage.hit(AxiomFailure::index_out_of_range, i, j)) return report;
        }
    if (stage.failed()) return report;
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) {
            if (cell(i, j).empty() && stage.hit(AxiomFailure::empty_product, i, j)) return report;
        }
    if (stage.failed()) return report;

    for (Element i = 0; i < n; ++i) {
        if (cell(i, 0) != ElementSet::singleton(i) && stage.hit(AxiomFailure::identity_violation, i)) return report;
    }
    if (stage.failed()) return report;

    std::vector<Element> star(n, 0);
    for (Element i = 0; i < n; ++i) {
        unsigned found = 0;
        for (Element j = 0; j < n; ++j) {
            if (cell(i, j).contains(0)) {
                star[i] = j;
                ++found;
            }
        }
        if (found == 0 && stage.hit(AxiomFailure::no_inverse, i)) return report;
        if (found > 1 && stage.hit(AxiomFailure::ambiguous_inverse, i)) return report;
    }
    if (stage.failed()) return report;

    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) {
            const auto ij = cell(i, j);
            for (Element k = 0; k < n; ++k) {
                if (row_product(table, n, i, cell(j, k)) != column_product(table, n, ij, k) &&
                    stage.hit(AxiomFailure::assoc_violation, i, j, k))
                    return report;
            }
        }
    if (stage.failed()) return report;

    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j)
            for (auto k : cell(i, j)) {
                const bool ok = cell(star[i], k).contains(j) && cell(k, star[j]).contains(i);
                if (!ok && stage.hit(AxiomFailure::exchange_violation, i, j, k)) return report;
            }
    if (stage.failed()) return report;

    // Consequences of the three axioms; a failure here means the table is
    // inconsistent in a way the stages above should already have caught.
    for (Element i = 0; i < n; ++i) {
        if (cell(0, i) != ElementSet::singleton(i) && stage.hit(AxiomFailure::identity_violation, i)) return report;
    }
    if (stage.failed()) return report;
    for (Element i = 0; i < n; ++i) {
        if (star[star[i]] != i && stage.hit(AxiomFailure::exchange_violation, i, star[i], 0)) return report;
    }
    return report;
}

Hypergroup Hypergroup::validate(std::size_t order, std::vector<ElementSet> table) {
    auto report = check_axioms(order, table, CheckDepth::count_all);
    if (!report.ok()) throw InvalidHypergroup(report);
    std::vector<Element> star(order);
    for (Element i = 0; i < order; ++i)
        for (Element j = 0; j < order; ++j)
            if (table[i * order + j].contains(0)) star[i] = j;
    return Hypergroup{order, std::move(table), std::move(star)};
}

Hypergroup Hypergroup::trivial() { return Hypergroup{1, {ElementSet::singleton(0)}, {0}}; }

ElementSet Hypergroup::set_product(ElementSet p, ElementSet q) const {
    ElementSet out;
    for (auto a : p) out |= row_product(table_, order_, a, q);
    return out;
}

ElementSet Hypergroup::set_star(ElementSet s) const {
    ElementSet out;
    for (auto a : s) out.insert(star_[a]);
    return out;
}

bool is_thin_element(const Hypergroup& h, Element s) {
    return h.product(h.star(s), s) == ElementSet::singleton(0);
}

ElementSet thin_part(const Hypergroup& h) {
    ElementSet out;
    for (Element s = 0; s < h.order(); ++s)
        if (is_thin_element(h, s)) out.insert(s);
    return out;
}

bool is_thin(const Hypergroup& h) { return thin_part(h) == h.elements(); }

bool is_group_check(const Hypergroup& h) {
    const auto n = h.order();
    std::vector<Element> mul(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const auto p = h.product(a, b);
            if (!p.is_singleton()) return false;
            mul[a * n + b] = p.min();
        }
    for (Element a = 0; a < n; ++a) {
        if (mul[a * n] != a || mul[a] != a) return false;
        bool has_inverse = false;
        for (Element b = 0; b < n; ++b) has_inverse = has_inverse || (mul[a * n + b] == 0 && mul[b * n + a] == 0);
        if (!has_inverse) return false;
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) return false;
    return true;
}

} // namespace hyperalg
