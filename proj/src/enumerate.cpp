#include "hyperalg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <set>

namespace hyperalg {

EnumerationCounters& EnumerationCounters::operator+=(const EnumerationCounters& o) {
    candidates += o.candidates;
    survivors += o.survivors;
    rejects += o.rejects;
    for (std::size_t k = 0; k < rejects_by_axiom.size(); ++k) rejects_by_axiom[k] += o.rejects_by_axiom[k];
    return *this;
}

std::vector<std::uint64_t> table_key(const Hypergroup& h) {
    std::vector<std::uint64_t> key;
    key.reserve(h.table().size());
    for (auto cell : h.table()) key.push_back(cell.bits());
    return key;
}

Hypergroup canonical_form(const Hypergroup& h) {
    const auto n = h.order();
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    auto relabel = [&](ElementSet s) {
        ElementSet out;
        for (auto x : s) out.insert(perm[x]);
        return out;
    };
    std::vector<std::uint64_t> best;
    std::vector<ElementSet> best_table;
    do {
        std::vector<ElementSet> table(n * n);
        for (Element i = 0; i < n; ++i)
            for (Element j = 0; j < n; ++j) table[perm[i] * n + perm[j]] = relabel(h.product(i, j));
        std::vector<std::uint64_t> key;
        for (auto c : table) key.push_back(c.bits());
        if (best.empty() || key < best) {
            best = std::move(key);
            best_table = std::move(table);
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return Hypergroup::validate(n, std::move(best_table));
}

namespace {

constexpr std::size_t kMaxFreeCells = 9;

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

/// Search space of one star involution: cell (i,j), i,j >= 1, contains 0
/// exactly when j = star(i), and is paired with cell (star j, star i).
struct StarBranch {
    std::size_t n = 0;
    std::size_t width = 0; // n - 1
    std::size_t cells = 0;
    std::vector<Element> star;
    std::vector<std::vector<std::uint64_t>> domains;
    std::vector<std::uint64_t> suffix; // suffix[c] = product of domain sizes of cells c..end
    std::vector<std::size_t> partner;

    StarBranch(std::size_t order, std::vector<Element> sigma) : n{order}, width{order - 1}, cells{width * width}, star{std::move(sigma)} {
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        domains.resize(cells);
        partner.resize(cells);
        for (Element i = 1; i < n; ++i)
            for (Element j = 1; j < n; ++j) {
                const auto c = cell(i, j);
                partner[c] = cell(star[j], star[i]);
                const bool has_one = star[i] == j;
                for (std::uint64_t v = 1; v <= full; ++v)
                    if (((v & 1U) != 0) == has_one) domains[c].push_back(v);
            }
        suffix.assign(cells + 1, 1);
        for (std::size_t c = cells; c-- > 0;) suffix[c] = suffix[c + 1] * domains[c].size();
    }

    [[nodiscard]] std::size_t cell(Element i, Element j) const { return (i - 1) * width + (j - 1); }
};

class BranchSearch {
  public:
    explicit BranchSearch(const StarBranch& b) : b_{b} {}

    void run_subtree(std::uint64_t first_value) {
        counters_.candidates += b_.suffix[1];
        values_[0] = first_value;
        if (auto f = newly_violated(0); f != AxiomFailure::none) {
            counters_.reject(f, b_.suffix[1]);
            return;
        }
        descend(1);
    }

    EnumerationCounters counters_;
    std::vector<Hypergroup> found_;

  private:
    [[nodiscard]] std::uint64_t get(Element a, Element b) const {
        if (a == 0) return std::uint64_t{1} << b;
        if (b == 0) return std::uint64_t{1} << a;
        return values_[b_.cell(a, b)];
    }

    [[nodiscard]] std::uint64_t star_image(std::uint64_t v) const {
        std::uint64_t out = 0;
        for (auto x : ElementSet{v}) out |= std::uint64_t{1} << b_.star[x];
        return out;
    }

    // Latest cell index among the given nonidentity products, or -1 when one
    // of them is unassigned at `depth`.
    [[nodiscard]] long latest(Element a, Element b, std::size_t depth, long current) const {
        if (a == 0 || b == 0 || current < 0) return current;
        const auto c = static_cast<long>(b_.cell(a, b));
        if (c > static_cast<long>(depth)) return -1;
        return std::max(current, c);
    }

    // Checks only the constraints whose last required cell is `depth`.
    [[nodiscard]] AxiomFailure newly_violated(std::size_t depth) const {
        const auto p = b_.partner[depth];
        if (p < depth && values_[depth] != star_image(values_[p])) return AxiomFailure::exchange_violation;
        if (p == depth && values_[depth] != star_image(values_[depth])) return AxiomFailure::exchange_violation;

        const auto n = static_cast<Element>(b_.n);
        for (Element i = 1; i < n; ++i)
            for (Element j = 1; j < n; ++j) {
                long last = latest(i, j, depth, 0);
                for (Element k = 1; k < n && last >= 0; ++k) {
                    long need = latest(j, k, depth, last);
                    if (need < 0) continue;
                    const auto jk = get(j, k);
                    const auto ij = get(i, j);
                    for (auto x : ElementSet{jk}) need = latest(i, x, depth, need);
                    for (auto y : ElementSet{ij}) need = latest(y, k, depth, need);
                    if (need != static_cast<long>(depth)) continue;
                    std::uint64_t left = 0, right = 0;
                    for (auto x : ElementSet{jk}) left |= get(i, x);
                    for (auto y : ElementSet{ij}) right |= get(y, k);
                    if (left != right) return AxiomFailure::assoc_violation;
                }
            }

        for (Element i = 1; i < n; ++i)
            for (Element j = 1; j < n; ++j) {
                const long own = latest(i, j, depth, 0);
                if (own < 0) continue;
                for (auto k : ElementSet{get(i, j)}) {
                    if (k == 0) continue;
                    const long need = latest(k, b_.star[j], depth, latest(b_.star[i], k, depth, own));
                    if (need != static_cast<long>(depth)) continue;
                    if (!((get(b_.star[i], k) >> j) & 1U) || !((get(k, b_.star[j]) >> i) & 1U))
                        return AxiomFailure::exchange_violation;
                }
            }
        return AxiomFailure::none;
    }

    void descend(std::size_t depth) {
        if (depth == b_.cells) {
            leaf();
            return;
        }
        for (auto v : b_.domains[depth]) {
            values_[depth] = v;
            if (auto f = newly_violated(depth); f != AxiomFailure::none) {
                counters_.reject(f, b_.suffix[depth + 1]);
                continue;
            }
            descend(depth + 1);
        }
    }

    void leaf() {
        const auto n = b_.n;
        std::vector<ElementSet> table(n * n);
        for (Element i = 0; i < n; ++i)
            for (Element j = 0; j < n; ++j) table[i * n + j] = ElementSet{get(i, j)};
        const auto report = check_axioms(n, table, CheckDepth::first_witness);
        if (!report.ok()) {
            counters_.reject(report.failure, 1);
            return;
        }
        ++counters_.survivors;
        found_.push_back(Hypergroup::validate(n, std::move(table)));
    }

    const StarBranch& b_;
    std::array<std::uint64_t, kMaxFreeCells> values_{};
};

std::vector<std::vector<Element>> star_involutions(std::size_t n) {
    std::vector<std::vector<Element>> out;
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    do {
        bool involution = true;
        for (Element i = 0; i < n; ++i) involution = involution && perm[perm[i]] == i;
        if (involution) out.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

/// Accounts for every candidate whose pattern of identity-containing cells is
/// not the graph of a star involution.
EnumerationCounters inverse_pattern_rejects(std::size_t n) {
    const std::size_t w = n - 1;
    const std::size_t cells = w * w;
    const std::uint64_t with_one = std::uint64_t{1} << (n - 1);
    const std::uint64_t without_one = with_one - 1;
    EnumerationCounters out;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << cells); ++pattern) {
        std::uint64_t weight = 1;
        for (std::size_t c = 0; c < cells; ++c) weight *= ((pattern >> c) & 1U) ? with_one : without_one;
        std::vector<Element> f(n, 0);
        AxiomFailure failure = AxiomFailure::none;
        for (std::size_t i = 1; i < n && failure == AxiomFailure::none; ++i) {
            unsigned count = 0;
            for (std::size_t j = 1; j < n; ++j)
                if ((pattern >> ((i - 1) * w + (j - 1))) & 1U) {
                    ++count;
                    f[i] = static_cast<Element>(j);
                }
            if (count == 0) failure = AxiomFailure::no_inverse;
            if (count > 1) failure = AxiomFailure::ambiguous_inverse;
        }
        if (failure == AxiomFailure::none) {
            bool involution = true;
            for (std::size_t i = 1; i < n; ++i) involution = involution && f[f[i]] == i;
            if (involution) continue; // searched in its star branch
            failure = AxiomFailure::exchange_violation;
        }
        out.candidates += weight;
        out.reject(failure, weight);
    }
    return out;
}

EnumerationResult enumerate_pruned(std::size_t n, bool parallel) {
    std::vector<StarBranch> branches;
    for (auto& sigma : star_involutions(n)) branches.emplace_back(n, std::move(sigma));

    struct Task {
        std::size_t branch;
        std::uint64_t first_value;
    };
    std::vector<Task> tasks;
    for (std::size_t b = 0; b < branches.size(); ++b)
        for (auto v : branches[b].domains[0]) tasks.push_back({b, v});

    std::vector<EnumerationCounters> counters(tasks.size());
    std::vector<std::vector<Hypergroup>> found(tasks.size());
    std::exception_ptr failure;
    auto run = [&](std::size_t t) {
        BranchSearch search{branches[tasks[t].branch]};
        search.run_subtree(tasks[t].first_value);
        counters[t] = search.counters_;
        found[t] = std::move(search.found_);
    };
    const auto count = static_cast<long>(tasks.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < count; ++t) {
            try {
                run(static_cast<std::size_t>(t));
            } catch (...) {
#pragma omp critical(enumerate_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (long t = 0; t < count; ++t) run(static_cast<std::size_t>(t));
    }

    EnumerationResult result;
    result.counters = inverse_pattern_rejects(n);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        result.counters += counters[t];
        for (auto& h : found[t]) result.hypergroups.push_back(std::move(h));
    }
    return result;
}

EnumerationResult enumerate_naive(std::size_t n) {
    if (n > 3) throw OrderOutOfRange("naive enumeration supports orders 2 and 3 only");
    const std::size_t w = n - 1;
    const std::size_t cells = w * w;
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> values(cells, 1);
    std::vector<ElementSet> table(n * n);
    for (Element i = 0; i < n; ++i) {
        table[i * n] = ElementSet::singleton(i);
        table[i] = ElementSet::singleton(i);
    }

    EnumerationResult result;
    for (;;) {
        for (std::size_t c = 0; c < cells; ++c) table[(c / w + 1) * n + (c % w + 1)] = ElementSet{values[c]};
        ++result.counters.candidates;
        const auto report = check_axioms(n, table, CheckDepth::first_witness);
        if (report.ok()) {
            ++result.counters.survivors;
            result.hypergroups.push_back(Hypergroup::validate(n, table));
        } else {
            result.counters.reject(report.failure, 1);
        }
        std::size_t c = cells;
        while (c > 0 && values[c - 1] == top) values[--c] = 1;
        if (c == 0) break;
        ++values[c - 1];
    }
    return result;
}

} // namespace

EnumerationResult enumerate_hypergroups(std::size_t order, bool canonicalize, Strategy strategy) {
    if (order < 2 || order > 4) throw OrderOutOfRange("enumeration supports orders 2 to 4");
    auto result = strategy == Strategy::naive ? enumerate_naive(order)
                                              : enumerate_pruned(order, strategy == Strategy::pruned);
    if (result.counters.candidates != ipow((std::uint64_t{1} << order) - 1, (order - 1) * (order - 1)) ||
        result.counters.candidates != result.counters.rejects + result.counters.survivors)
        throw InternalMismatch("enumeration counters do not cover the candidate space");

    auto by_key = [](const Hypergroup& a, const Hypergroup& b) { return table_key(a) < table_key(b); };
    if (canonicalize) {
        std::vector<Hypergroup> canonical;
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto& h : result.hypergroups) {
            auto c = canonical_form(h);
            if (seen.insert(table_key(c)).second) canonical.push_back(std::move(c));
        }
        result.hypergroups = std::move(canonical);
    }
    std::sort(result.hypergroups.begin(), result.hypergroups.end(), by_key);
    return result;
}

} // namespace hyperalg
