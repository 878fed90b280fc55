#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcalp/gallai_edmonds.hpp"
#include "vcalp/graph.hpp"
#include "vcalp/lpvc.hpp"
#include "vcalp/reductions.hpp"

namespace vcalp {

// 2LP(g) - MM(g), a lower bound on the vertex cover number.
HalfInt lovasz_plummer_bound(const Graph& g);

// One instance produced by a branching rule.
struct ChildInstance {
    Graph graph;
    Budget budget;
    VertexSet picked;
};

enum class BranchRule { inner_edge = 1, outer_vertex = 2 };

// Branch on the endpoints of an edge of G[I + P]. `g` must be reduced.
// Each child is checked for MM dropping by exactly one and 2LP by exactly one.
std::vector<ChildInstance> branch_rule_1(const Graph& g, const Budget& b,
                                         const GallaiEdmonds& d, Edge e);
std::vector<ChildInstance> branch_rule_1(const Graph& g, const Budget& b, Edge e);

// Three-way branch on u in O with O-neighbours v, w: {v, w}, {u, x}, {u, y}
// where {x, y} is an edge of the perfect part of G - u. `g` must be reduced
// and I + P independent.
std::vector<ChildInstance> branch_rule_2(const Graph& g, const Budget& b, const GallaiEdmonds& d);
std::vector<ChildInstance> branch_rule_2(const Graph& g, const Budget& b);

// Receives a callback for every event of a search. Default methods ignore
// the event.
class SolveObserver {
public:
    virtual ~SolveObserver() = default;
    virtual void on_reduction_step(const ReductionStep&) {}
    // Graph and budget after exhaustive reduction at a search node.
    virtual void on_reduced(const Graph&, const Budget&, std::size_t /*depth*/) {}
    virtual void on_branch(BranchRule, const Budget& /*parent*/,
                           std::span<const ChildInstance> /*children*/) {}
};

struct InitialBounds {
    std::int64_t mm = 0;
    HalfInt lp;
    std::int64_t lower_bound = 0;  // 2LP - MM
    std::int64_t k = 0;
    std::int64_t k_hat = 0;

    bool operator==(const InitialBounds&) const = default;
};

struct SolveReport {
    bool answer = false;
    std::optional<VertexSet> certificate;
    std::uint64_t nodes_visited = 0;
    std::uint64_t max_depth = 0;
    std::array<std::uint64_t, 3> reductions_applied{};
    std::array<std::uint64_t, 2> branches_applied{};
    InitialBounds initial;

    bool operator==(const SolveReport&) const = default;
};

struct ParamMode {
    enum class Kind { plain_vc, agvc, vcal, vcalp };
    Kind kind = Kind::vcalp;
    std::int64_t value = 0;

    static ParamMode plain_vc(std::int64_t k) { return {Kind::plain_vc, k}; }
    static ParamMode agvc(std::int64_t k_mu) { return {Kind::agvc, k_mu}; }
    static ParamMode vcal(std::int64_t k_lambda) { return {Kind::vcal, k_lambda}; }
    static ParamMode vcalp(std::int64_t k_hat) { return {Kind::vcalp, k_hat}; }
};

std::string to_string(ParamMode::Kind kind);
std::optional<ParamMode::Kind> parse_mode(const std::string& name);

// Classical budget for a mode: agvc MM + k_mu, vcal ceil(LP) + k_lambda,
// vcalp 2LP - MM + k_hat.
std::int64_t normalized_budget(std::int64_t mm, HalfInt lp, ParamMode mode);

struct SolveOptions {
    SolveObserver* observer = nullptr;
};

// Is OPT(g) <= 2LP(g) - MM(g) + k_hat?
SolveReport solve_vcalp(const Graph& g, std::int64_t k_hat, const SolveOptions& opts = {});

SolveReport solve_mode(const Graph& g, ParamMode mode, const SolveOptions& opts = {});

}  // namespace vcalp
