#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "vcalp/graph.hpp"
#include "vcalp/lpvc.hpp"

namespace vcalp {

// Classical budget k together with MM and 2*LP of the graph it belongs to.
// The measure k_hat = k + MM - 2LP is always an integer.
struct Budget {
    std::int64_t k = 0;
    std::int64_t mm = 0;
    std::int64_t lp2 = 0;

    std::int64_t k_hat() const { return k + mm - lp2; }
    HalfInt lp() const { return HalfInt::from_twice(lp2); }

    static Budget of(const Graph& g, std::int64_t k);

    bool operator==(const Budget&) const = default;
};

// Rule 1: keep G[V_half] of an extreme LP optimum; V_1 goes into the cover.
struct Rule1Step {
    VertexSet ones;
    VertexSet zeros;
};

// Rule 2: surplus-1 set whose neighbourhood has an edge; N(Z) goes into the
// cover and Z + N(Z) is deleted.
struct Rule2Step {
    VertexSet z;
    VertexSet nz;
};

// Rule 3: surplus-1 set with independent neighbourhood; Z is deleted and
// N(Z) is identified into `merged`.
struct Rule3Step {
    VertexSet z;
    VertexSet nz;
    VertexId merged;
};

// Vertices taken into the cover by a branching decision.
struct BranchPick {
    VertexSet picked;
};

using TraceAction = std::variant<Rule1Step, Rule2Step, Rule3Step, BranchPick>;

struct ReductionStep {
    TraceAction action;
    Budget before;
    Budget after;
};

// Enough to turn a cover of `result` into a cover of `source`.
struct ReductionTrace {
    Graph source;
    Graph result;
    std::vector<ReductionStep> steps;
};

struct Reduced {
    Graph graph;
    Budget budget;
    ReductionStep step;
};

// Each rule returns nullopt when it does not apply. A rule applies only when
// the earlier rules do not. Each application checks the measure and the
// per-rule MM/LP bounds and throws InvariantViolation if one fails.
std::optional<Reduced> apply_rule1(const Graph& g, const Budget& b);
std::optional<Reduced> apply_rule2(const Graph& g, const Budget& b);
std::optional<Reduced> apply_rule3(const Graph& g, const Budget& b);

struct ReductionResult {
    Graph graph;
    Budget budget;
    ReductionTrace trace;

    // Applications of rules 1, 2 and 3.
    std::array<std::uint64_t, 3> applied{};
};

// Applies the first applicable rule until none applies. The result is empty
// or has surplus >= 2.
ReductionResult reduce_exhaustively(const Graph& g, const Budget& b);

// Records a branching pick on top of a trace; `child` becomes the new result.
void append_branch_pick(ReductionTrace& trace, const VertexSet& picked, const Graph& child);

// Turns a vertex cover of trace.result into one of trace.source. Throws
// ContractViolation if `cover` does not cover trace.result.
VertexSet lift_cover(const ReductionTrace& trace, const VertexSet& cover);

// Independent checks of the safety inequalities for one recorded step.
// Returns an empty string when they hold, a description otherwise.
std::string check_step_bounds(const ReductionStep& step);

}  // namespace vcalp
