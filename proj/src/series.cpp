#include "hyperalg/series.hpp"

#include <exception>
#include <set>

namespace hyperalg {

ElementSet commutator_elements(const Hypergroup& h, Element a, Element b) {
    auto s = h.set_product(ElementSet::singleton(h.star(a)), ElementSet::singleton(h.star(b)));
    s = h.set_product(s, ElementSet::singleton(a));
    return h.set_product(s, ElementSet::singleton(b));
}

ClosedSubset commutator_subset(const Hypergroup& h, ElementSet a, ElementSet b) {
    if (a.empty() || b.empty()) throw EmptySet{};
    ElementSet gens;
    for (auto x : a)
        for (auto y : b) gens |= commutator_elements(h, x, y);
    return generated_closure(h, gens);
}

std::size_t LowerCentralSeries::nilpotency_class() const {
    for (std::size_t k = 0; k < terms.size(); ++k)
        if (terms[k] == ElementSet::singleton(0)) return k;
    return terms.size();
}

ElementSet LowerCentralSeries::term(std::size_t s) const {
    if (s == 0) throw std::out_of_range("lower central terms are indexed from 1");
    return s <= terms.size() ? terms[s - 1] : terms.back();
}

LowerCentralSeries lower_central_series(const Hypergroup& h) {
    LowerCentralSeries out{{h.elements()}};
    for (std::size_t step = 0;; ++step) {
        if (step > h.order()) throw InternalMismatch("lower central series did not stabilize");
        const auto next = commutator_subset(h, out.terms.back(), h.elements()).members();
        if (next == out.terms.back()) break;
        if (!next.subset_of(out.terms.back())) throw InternalMismatch("lower central series is not decreasing");
        out.terms.push_back(next);
    }
    return out;
}

NilpotencyVerdict is_nilpotent(const Hypergroup& h) {
    const auto series = lower_central_series(h);
    return {series.nilpotent(), series.nilpotent() ? series.nilpotency_class() : 0};
}

CentralSeries closed_center_series(const Hypergroup& h) {
    CentralSeries out{{ElementSet::singleton(0)}};
    for (std::size_t step = 0;; ++step) {
        if (step > h.order()) throw InternalMismatch("closed center series did not stabilize");
        const auto q = build_quotient(h, out.terms.back());
        const auto next = lift_blocks(q, closed_center(q.induced).members());
        if (!is_closed(h, next) || !is_normal(h, next))
            throw InternalMismatch("closed center term {" + next.to_string() + "} is not normal closed");
        if (next == out.terms.back()) break;
        out.terms.push_back(next);
    }
    return out;
}

ClosedSubset thin_residue(const Hypergroup& h, const ClosedSubsetLattice& lattice) {
    auto by_intersection = h.elements();
    for (const auto& f : lattice.members())
        if (f.strongly_normal()) by_intersection &= f.members();
    const auto by_commutator = commutator_subset(h, h.elements(), ElementSet::singleton(0));
    if (by_commutator.members() != by_intersection)
        throw InternalMismatch("thin residue: intersection {" + by_intersection.to_string() + "} != [H,1] {" +
                               by_commutator.members().to_string() + "}");
    if (!by_commutator.strongly_normal()) throw InternalMismatch("thin residue is not strongly normal");
    return by_commutator;
}

ClosedSubset thin_residue(const Hypergroup& h) { return thin_residue(h, ClosedSubsetLattice{h}); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1) ++out[n];
    return out;
}

namespace {

/// Thinness and order of K_j // K_i for every strict containment pair, with
/// each quotient actually built inside K_j.
class StepQuotients {
  public:
    StepQuotients(const Hypergroup& h, const ClosedSubsetLattice& lattice) : m_{lattice.size()}, steps_(m_ * m_) {
        std::vector<std::optional<SubHypergroup>> subs(m_);
        std::exception_ptr failure;
        const auto nodes = static_cast<long>(m_);
#pragma omp parallel for schedule(dynamic)
        for (long j = 0; j < nodes; ++j) {
            try {
                subs[static_cast<std::size_t>(j)] = restrict_to(h, lattice[static_cast<std::size_t>(j)].members());
            } catch (...) {
#pragma omp critical(step_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);

        const auto pairs = static_cast<long>(m_ * m_);
#pragma omp parallel for schedule(dynamic, 8)
        for (long p = 0; p < pairs; ++p) {
            const auto i = static_cast<std::size_t>(p) / m_;
            const auto j = static_cast<std::size_t>(p) % m_;
            if (i == j || !lattice.contained(i, j)) continue;
            try {
                const auto& sub = *subs[j];
                const auto q = build_quotient(sub.sub, sub.to_sub(lattice[i].members()));
                auto& s = steps_[static_cast<std::size_t>(p)];
                s.valid = true;
                s.thin = quotient_is_thin(q);
                s.order = q.order();
                // Thin quotients are exactly those by strongly normal kernels.
                if (s.thin != lattice.strongly_normal_in(i, j) || s.order != lattice.index_in(i, j))
                    throw InternalMismatch("step quotient disagrees with lattice relation for {" +
                                           lattice[i].members().to_string() + "} in {" +
                                           lattice[j].members().to_string() + "}");
            } catch (...) {
#pragma omp critical(step_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    [[nodiscard]] bool thin(std::size_t i, std::size_t j) const { return at(i, j).valid && at(i, j).thin; }
    [[nodiscard]] std::size_t order(std::size_t i, std::size_t j) const { return at(i, j).order; }

  private:
    struct Step {
        bool valid = false;
        bool thin = false;
        std::size_t order = 0;
    };
    [[nodiscard]] const Step& at(std::size_t i, std::size_t j) const { return steps_[i * m_ + j]; }

    std::size_t m_;
    std::vector<Step> steps_;
};

bool solvable_from(const ClosedSubsetLattice& lattice, const StepQuotients& steps, std::size_t i,
                   std::vector<bool>& failed, std::vector<std::size_t>& path) {
    if (i == lattice.top()) return true;
    if (failed[i]) return false;
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
        if (!steps.thin(i, j) || !is_prime(steps.order(i, j))) continue;
        path.push_back(j);
        if (solvable_from(lattice, steps, j, failed, path)) return true;
        path.pop_back();
    }
    failed[i] = true;
    return false;
}

SolvabilityChain make_chain(const ClosedSubsetLattice& lattice, const StepQuotients& steps,
                            const std::vector<std::size_t>& path) {
    SolvabilityChain chain;
    for (std::size_t k = 0; k < path.size(); ++k)
        chain.steps.push_back({lattice[path[k]].members(), k == 0 ? 0 : steps.order(path[k - 1], path[k])});
    return chain;
}

} // namespace

std::optional<SolvabilityChain> is_solvable(const Hypergroup& h, const ClosedSubsetLattice& lattice) {
    const StepQuotients steps{h, lattice};
    std::vector<bool> failed(lattice.size(), false);
    std::vector<std::size_t> path{lattice.bottom()};
    if (!solvable_from(lattice, steps, lattice.bottom(), failed, path)) return std::nullopt;
    return make_chain(lattice, steps, path);
}

std::optional<SolvabilityChain> is_solvable(const Hypergroup& h) { return is_solvable(h, ClosedSubsetLattice{h}); }

std::optional<RTReport> rt_analysis(const Hypergroup& h, const ClosedSubsetLattice& lattice) {
    const StepQuotients steps{h, lattice};
    const auto m = lattice.size();
    // Members are sorted by size, so every strict predecessor has a smaller index.
    std::vector<std::set<std::uint64_t>> valencies(m);
    std::vector<std::size_t> parent(m, 0);
    valencies[lattice.bottom()].insert(1);
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (valencies[i].empty() || !steps.thin(i, j)) continue;
            if (valencies[j].empty()) parent[j] = i;
            for (auto v : valencies[i]) valencies[j].insert(v * steps.order(i, j));
        }
    for (std::size_t j = 0; j < m; ++j)
        if (valencies[j].size() > 1)
            throw InternalMismatch("valency of {" + lattice[j].members().to_string() + "} depends on the chain");
    if (valencies[lattice.top()].empty()) return std::nullopt;

    RTReport report;
    std::vector<std::size_t> path;
    for (auto j = lattice.top();; j = parent[j]) {
        path.insert(path.begin(), j);
        if (j == lattice.bottom()) break;
    }
    report.chain = make_chain(lattice, steps, path);
    report.valency = *valencies[lattice.top()].begin();
    for (std::size_t j = 0; j < m; ++j)
        if (valencies[j].empty()) report.non_rt_subsets.push_back(lattice[j].members());

    for (const auto& [p, exponent] : factorize(report.valency)) {
        std::uint64_t p_part = 1;
        for (unsigned e = 0; e < exponent; ++e) p_part *= p;
        for (std::size_t j = 0; j < m; ++j)
            if (!valencies[j].empty() && *valencies[j].begin() == p_part)
                report.sylow.push_back({p, lattice[j].members(), p_part});
    }
    return report;
}

std::optional<RTReport> rt_analysis(const Hypergroup& h) { return rt_analysis(h, ClosedSubsetLattice{h}); }

} // namespace hyperalg
