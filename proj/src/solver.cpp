#include "vcalp/solver.hpp"

#include <algorithm>
#include <string>

#include "vcalp/errors.hpp"
#include "vcalp/matching.hpp"

namespace vcalp {

HalfInt lovasz_plummer_bound(const Graph& g) {
    return HalfInt::from_int(lp_value(g).twice() - static_cast<std::int64_t>(matching_number(g)));
}

namespace {

ChildInstance make_child(const Graph& g, const Budget& parent, const VertexSet& picked) {
    Graph child = delete_vertices(g, picked);
    Budget b = Budget::of(child, parent.k - static_cast<std::int64_t>(picked.size()));
    return ChildInstance{std::move(child), b, picked};
}

void check_measure_drop(const Budget& parent, const std::vector<ChildInstance>& children,
                        const char* rule) {
    for (const auto& c : children) {
        if (c.budget.k_hat() > parent.k_hat() - 1) {
            throw InvariantViolation(std::string(rule) + ": child measure " +
                                     std::to_string(c.budget.k_hat()) +
                                     " did not drop below parent measure " +
                                     std::to_string(parent.k_hat()));
        }
    }
}

}  // namespace

std::vector<ChildInstance> branch_rule_1(const Graph& g, const Budget& b, const GallaiEdmonds& d,
                                         Edge e) {
    VertexSet inner = set_union(d.inner, d.perfect);
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v) ||
        !set_contains(inner, e.u) || !set_contains(inner, e.v)) {
        throw ContractViolation("branch_rule_1: edge is not inside G[I + P]");
    }
    std::vector<ChildInstance> children;
    children.push_back(make_child(g, b, VertexSet{e.u}));
    children.push_back(make_child(g, b, VertexSet{e.v}));
    for (const auto& c : children) {
        // Every maximum matching saturates I + P, and surplus >= 2 makes the
        // LP drop by exactly 1/2 per deleted vertex.
        if (c.budget.mm != b.mm - 1 || c.budget.lp2 != b.lp2 - 1) {
            throw InvariantViolation("branch_rule_1: deleting " +
                                     std::to_string(c.picked.front().value) +
                                     " did not drop MM and 2LP by exactly one");
        }
    }
    check_measure_drop(b, children, "branch_rule_1");
    return children;
}

std::vector<ChildInstance> branch_rule_1(const Graph& g, const Budget& b, Edge e) {
    return branch_rule_1(g, b, decompose(g), e);
}

std::vector<ChildInstance> branch_rule_2(const Graph& g, const Budget& b, const GallaiEdmonds& d) {
    if (find_inner_edge(g, d)) {
        throw ContractViolation("branch_rule_2: G[I + P] has an edge; use branch_rule_1");
    }
    auto [u, v, w] = find_branch_vertex(g, d);

    std::vector<ChildInstance> children;
    children.push_back(make_child(g, b, VertexSet{v, w}));
    if (children.front().budget.mm > b.mm - 1) {
        throw InvariantViolation("branch_rule_2: deleting two adjacent-component O vertices kept MM");
    }

    Graph without_u = delete_vertices(g, VertexSet{u});
    if (static_cast<std::int64_t>(matching_number(without_u)) != b.mm) {
        throw InvariantViolation("branch_rule_2: deleting an O vertex changed MM");
    }
    auto edge = find_perfect_part_edge(without_u, decompose(without_u));
    if (!edge) {
        throw InvariantViolation("branch_rule_2: perfect part of G - u has no edge");
    }
    for (VertexId x : {edge->u, edge->v}) {
        auto c = make_child(without_u, b, VertexSet{x});
        c.budget.k = b.k - 2;
        c.picked = make_vertex_set({u, x});
        children.push_back(std::move(c));
    }
    check_measure_drop(b, children, "branch_rule_2");
    return children;
}

std::vector<ChildInstance> branch_rule_2(const Graph& g, const Budget& b) {
    return branch_rule_2(g, b, decompose(g));
}

std::string to_string(ParamMode::Kind kind) {
    switch (kind) {
        case ParamMode::Kind::plain_vc: return "vc";
        case ParamMode::Kind::agvc: return "agvc";
        case ParamMode::Kind::vcal: return "vcal";
        case ParamMode::Kind::vcalp: return "vcalp";
    }
    return "?";
}

std::optional<ParamMode::Kind> parse_mode(const std::string& name) {
    if (name == "vc") return ParamMode::Kind::plain_vc;
    if (name == "agvc") return ParamMode::Kind::agvc;
    if (name == "vcal") return ParamMode::Kind::vcal;
    if (name == "vcalp") return ParamMode::Kind::vcalp;
    return std::nullopt;
}

std::int64_t normalized_budget(std::int64_t mm, HalfInt lp, ParamMode mode) {
    switch (mode.kind) {
        case ParamMode::Kind::plain_vc: return mode.value;
        case ParamMode::Kind::agvc: return mm + mode.value;
        case ParamMode::Kind::vcal: return lp.ceil() + mode.value;
        case ParamMode::Kind::vcalp: return lp.twice() - mm + mode.value;
    }
    return mode.value;
}

namespace {

class Search {
public:
    Search(SolveReport& report, SolveObserver* observer, std::int64_t root_measure)
        : report_(report), observer_(observer), root_measure_(root_measure) {}

    std::optional<VertexSet> run(const Graph& g, const Budget& b, std::uint64_t depth) {
        ++report_.nodes_visited;
        report_.max_depth = std::max(report_.max_depth, depth);
        if (static_cast<std::int64_t>(depth) > root_measure_) {
            throw InvariantViolation("search depth " + std::to_string(depth) +
                                     " exceeds the initial measure " +
                                     std::to_string(root_measure_));
        }

        auto reduced = reduce_exhaustively(g, b);
        for (std::size_t i = 0; i < 3; ++i) report_.reductions_applied[i] += reduced.applied[i];
        if (observer_) {
            for (const auto& step : reduced.trace.steps) observer_->on_reduction_step(step);
            observer_->on_reduced(reduced.graph, reduced.budget, depth);
        }

        const Budget& nb = reduced.budget;
        if (nb.k_hat() < 0) return std::nullopt;
        if (reduced.graph.empty()) return lift_cover(reduced.trace, {});

        auto d = decompose(reduced.graph);
        std::vector<ChildInstance> children;
        BranchRule rule;
        if (auto e = find_inner_edge(reduced.graph, d)) {
            rule = BranchRule::inner_edge;
            children = branch_rule_1(reduced.graph, nb, d, *e);
        } else {
            rule = BranchRule::outer_vertex;
            children = branch_rule_2(reduced.graph, nb, d);
        }
        ++report_.branches_applied[static_cast<std::size_t>(rule) - 1];
        if (observer_) observer_->on_branch(rule, nb, children);

        for (const auto& child : children) {
            // Negative measure means NO by the lower bound; no need to descend.
            if (child.budget.k_hat() < 0) continue;
            if (auto cover = run(child.graph, child.budget, depth + 1)) {
                ReductionTrace trace = reduced.trace;
                append_branch_pick(trace, child.picked, child.graph);
                return lift_cover(trace, *cover);
            }
        }
        return std::nullopt;
    }

private:
    SolveReport& report_;
    SolveObserver* observer_;
    std::int64_t root_measure_;
};

SolveReport solve_with_budget(const Graph& g, std::int64_t k, std::int64_t mm, HalfInt lp,
                              const SolveOptions& opts) {
    SolveReport report;
    Budget root{k, mm, lp.twice()};
    report.initial = InitialBounds{mm, lp, lp.twice() - mm, k, root.k_hat()};
    if (root.k_hat() < 0) return report;

    Search search(report, opts.observer, root.k_hat());
    if (auto cover = search.run(g, root, 0)) {
        if (!is_vertex_cover(g, *cover) || static_cast<std::int64_t>(cover->size()) > k) {
            throw InvariantViolation("certificate is not a vertex cover within the budget");
        }
        report.answer = true;
        report.certificate = std::move(cover);
    }
    return report;
}

}  // namespace

SolveReport solve_vcalp(const Graph& g, std::int64_t k_hat, const SolveOptions& opts) {
    return solve_mode(g, ParamMode::vcalp(k_hat), opts);
}

SolveReport solve_mode(const Graph& g, ParamMode mode, const SolveOptions& opts) {
    auto mm = static_cast<std::int64_t>(matching_number(g));
    HalfInt lp = lp_value(g);
    return solve_with_budget(g, normalized_budget(mm, lp, mode), mm, lp, opts);
}

}  // namespace vcalp
