#include "vcalp/reductions.hpp"

#include <sstream>
#include <string>

#include "vcalp/errors.hpp"
#include "vcalp/matching.hpp"

namespace vcalp {

Budget Budget::of(const Graph& g, std::int64_t k) {
    return Budget{k, static_cast<std::int64_t>(matching_number(g)), lp_value(g).twice()};
}

namespace {

std::int64_t ssize(const VertexSet& s) { return static_cast<std::int64_t>(s.size()); }

bool has_internal_edge(const Graph& g, const VertexSet& s) { return !is_independent_set(g, s); }

void enforce(const ReductionStep& step) {
    if (auto problem = check_step_bounds(step); !problem.empty()) {
        throw InvariantViolation("reduction step broke a safety bound: " + problem);
    }
}

Reduced rule1_from(const Graph& g, const Budget& b, const HalfIntegralSolution& x) {
    Rule1Step s{x.ones(), x.zeros()};
    Graph next = induced_subgraph(g, x.halves());
    Budget after = Budget::of(next, b.k - ssize(s.ones));
    Reduced r{std::move(next), after, ReductionStep{std::move(s), b, after}};
    enforce(r.step);
    return r;
}

Reduced rule2_from(const Graph& g, const Budget& b, const SurplusWitness& w) {
    Graph next = delete_vertices(g, set_union(w.z, w.neighborhood));
    Budget after = Budget::of(next, b.k - ssize(w.neighborhood));
    Reduced r{std::move(next), after, ReductionStep{Rule2Step{w.z, w.neighborhood}, b, after}};
    enforce(r.step);
    return r;
}

Reduced rule3_from(const Graph& g, const Budget& b, const SurplusWitness& w) {
    auto [next, merged] = identify_set(delete_vertices(g, w.z), w.neighborhood);
    Budget after = Budget::of(next, b.k - ssize(w.z));
    Reduced r{std::move(next), after,
              ReductionStep{Rule3Step{w.z, w.neighborhood, merged}, b, after}};
    enforce(r.step);
    return r;
}

}  // namespace

std::string check_step_bounds(const ReductionStep& step) {
    const Budget& b = step.before;
    const Budget& a = step.after;
    std::ostringstream problem;
    if (a.k_hat() > b.k_hat()) {
        problem << "measure rose from " << b.k_hat() << " to " << a.k_hat() << "; ";
    }
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Rule1Step>) {
                const auto ones = ssize(s.ones);
                if (a.k != b.k - ones) problem << "rule 1 budget; ";
                if (a.mm > b.mm - ones) problem << "rule 1 MM' > MM - |V1|; ";
                if (a.lp2 != b.lp2 - 2 * ones) problem << "rule 1 LP' != LP - |V1|; ";
            } else if constexpr (std::is_same_v<T, Rule2Step>) {
                if (a.k != b.k - ssize(s.nz)) problem << "rule 2 budget; ";
                if (a.mm > b.mm - ssize(s.z)) problem << "rule 2 MM' > MM - |Z|; ";
                if (a.lp2 < b.lp2 - 2 * ssize(s.nz) + 1) problem << "rule 2 LP' < LP - |N(Z)| + 1/2; ";
            } else if constexpr (std::is_same_v<T, Rule3Step>) {
                if (a.k != b.k - ssize(s.z)) problem << "rule 3 budget; ";
                if (a.mm > b.mm - ssize(s.z)) problem << "rule 3 MM' > MM - |Z|; ";
                if (a.lp2 < b.lp2 - 2 * ssize(s.z)) problem << "rule 3 LP' < LP - |Z|; ";
            }
        },
        step.action);
    return problem.str();
}

std::optional<Reduced> apply_rule1(const Graph& g, const Budget& b) {
    auto analysis = detail::analyze_extreme(g);
    if (analysis.solution.all_half()) return std::nullopt;
    return rule1_from(g, b, analysis.solution);
}

std::optional<Reduced> apply_rule2(const Graph& g, const Budget& b) {
    auto analysis = detail::analyze_extreme(g);
    if (!analysis.solution.all_half() || !analysis.surplus_one) return std::nullopt;
    const auto& w = *analysis.surplus_one;
    if (!has_internal_edge(g, w.neighborhood)) return std::nullopt;
    return rule2_from(g, b, w);
}

std::optional<Reduced> apply_rule3(const Graph& g, const Budget& b) {
    auto analysis = detail::analyze_extreme(g);
    if (!analysis.solution.all_half() || !analysis.surplus_one) return std::nullopt;
    const auto& w = *analysis.surplus_one;
    if (has_internal_edge(g, w.neighborhood)) return std::nullopt;
    return rule3_from(g, b, w);
}

ReductionResult reduce_exhaustively(const Graph& g, const Budget& b) {
    ReductionResult out{g, b, ReductionTrace{g, Graph{}, {}}, {}};
    while (!out.graph.empty()) {
        auto analysis = detail::analyze_extreme(out.graph);
        std::optional<Reduced> r;
        std::size_t rule = 0;
        if (!analysis.solution.all_half()) {
            r = rule1_from(out.graph, out.budget, analysis.solution);
        } else if (analysis.surplus_one) {
            const auto& w = *analysis.surplus_one;
            if (has_internal_edge(out.graph, w.neighborhood)) {
                r = rule2_from(out.graph, out.budget, w);
                rule = 1;
            } else {
                r = rule3_from(out.graph, out.budget, w);
                rule = 2;
            }
        } else {
            break;
        }
        if (r->graph.order() >= out.graph.order()) {
            throw InvariantViolation("reduction step did not shrink the graph");
        }
        ++out.applied[rule];
        out.trace.steps.push_back(std::move(r->step));
        out.graph = std::move(r->graph);
        out.budget = r->budget;
    }
    out.trace.result = out.graph;
    return out;
}

void append_branch_pick(ReductionTrace& trace, const VertexSet& picked, const Graph& child) {
    trace.steps.push_back(ReductionStep{BranchPick{picked}, Budget{}, Budget{}});
    trace.result = child;
}

VertexSet lift_cover(const ReductionTrace& trace, const VertexSet& cover) {
    for (VertexId v : cover) {
        if (!trace.result.has_vertex(v)) {
            throw ContractViolation("cover mentions vertex " + std::to_string(v.value) +
                                    " which is not in the reduced graph");
        }
    }
    if (!is_vertex_cover(trace.result, cover)) {
        throw ContractViolation("lift_cover input does not cover the reduced graph");
    }
    VertexSet out = cover;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Rule1Step>) {
                    out = set_union(out, s.ones);
                } else if constexpr (std::is_same_v<T, Rule2Step>) {
                    out = set_union(out, s.nz);
                } else if constexpr (std::is_same_v<T, Rule3Step>) {
                    if (set_contains(out, s.merged)) {
                        out = set_union(set_difference(out, VertexSet{s.merged}), s.nz);
                    } else {
                        out = set_union(out, s.z);
                    }
                } else {
                    out = set_union(out, s.picked);
                }
            },
            it->action);
    }
    if (!is_vertex_cover(trace.source, out)) {
        throw InvariantViolation("lifted cover does not cover the source graph");
    }
    return out;
}

}  // namespace vcalp
