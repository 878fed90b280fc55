#include "vcalp/lpvc.hpp"

#include <algorithm>
#include <string>

#include "vcalp/errors.hpp"
#include "vcalp/matching.hpp"

namespace vcalp {

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfIntegralSolution::HalfIntegralSolution(std::vector<VertexId> vertices, std::vector<Half> values)
    : vertices_(std::move(vertices)), values_(std::move(values)) {
    if (vertices_.size() != values_.size()) {
        throw ContractViolation("solution needs one value per vertex");
    }
}

Half HalfIntegralSolution::value_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        throw InvalidVertex("vertex " + std::to_string(v.value) + " has no LP value");
    }
    return values_[static_cast<std::size_t>(it - vertices_.begin())];
}

void HalfIntegralSolution::set(VertexId v, Half h) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        throw InvalidVertex("vertex " + std::to_string(v.value) + " has no LP value");
    }
    values_[static_cast<std::size_t>(it - vertices_.begin())] = h;
}

HalfInt HalfIntegralSolution::value() const {
    std::int64_t twice = 0;
    for (Half h : values_) twice += static_cast<std::int64_t>(h);
    return HalfInt::from_twice(twice);
}

bool HalfIntegralSolution::all_half() const {
    return std::all_of(values_.begin(), values_.end(), [](Half h) { return h == Half::half; });
}

VertexSet HalfIntegralSolution::part(Half h) const {
    VertexSet out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (values_[i] == h) out.push_back(vertices_[i]);
    }
    return out;
}

bool is_feasible(const Graph& g, const HalfIntegralSolution& x) {
    auto ids = g.vertices();
    if (!std::equal(ids.begin(), ids.end(), x.vertices().begin(), x.vertices().end())) return false;
    for (const Edge& e : g.edges()) {
        if (static_cast<int>(x.value_of(e.u)) + static_cast<int>(x.value_of(e.v)) < 2) return false;
    }
    return true;
}

HalfIntegralSolution lp_optimum(const Graph& g) {
    // Double cover: v_L adjacent to u_R for every edge {u,v}, so the dense
    // adjacency is reused as the left-to-right list.
    auto adj = g.dense_adjacency();
    auto mates = detail::hopcroft_karp(adj, adj.size());
    auto [cl, cr] = detail::konig_cover(adj, mates);
    std::vector<Half> values(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        values[i] = static_cast<Half>(static_cast<int>(cl[i]) + static_cast<int>(cr[i]));
    }
    auto ids = g.vertices();
    return HalfIntegralSolution(std::vector<VertexId>(ids.begin(), ids.end()), std::move(values));
}

HalfInt lp_value(const Graph& g) {
    auto adj = g.dense_adjacency();
    auto mates = detail::hopcroft_karp(adj, adj.size());
    return HalfInt::from_twice(static_cast<std::int64_t>(mates.size));
}

std::pair<HalfInt, HalfIntegralSolution> lp_value_forced_zero(const Graph& g, VertexId v) {
    VertexSet nbrs = neighbors(g, v);
    VertexSet closed = set_union(nbrs, VertexSet{v});
    Graph rest = delete_vertices(g, closed);
    HalfIntegralSolution inner = lp_optimum(rest);

    auto ids = g.vertices();
    std::vector<Half> values;
    values.reserve(ids.size());
    std::size_t j = 0;
    for (VertexId w : ids) {
        if (w == v) {
            values.push_back(Half::zero);
        } else if (set_contains(nbrs, w)) {
            values.push_back(Half::one);
        } else {
            values.push_back(inner.values()[j++]);
        }
    }
    HalfIntegralSolution x(std::vector<VertexId>(ids.begin(), ids.end()), std::move(values));
    HalfInt value = x.value();
    return {value, std::move(x)};
}

namespace {

SurplusWitness witness_from(const Graph& g, const HalfIntegralSolution& forced,
                            std::int64_t expected_surplus) {
    SurplusWitness w;
    w.z = forced.zeros();
    w.neighborhood = neighborhood_of_set(g, w.z);
    w.surplus = static_cast<std::int64_t>(w.neighborhood.size()) -
                static_cast<std::int64_t>(w.z.size());
    if (w.surplus != expected_surplus || !is_independent_set(g, w.z)) {
        throw InvariantViolation("forced-zero witness has surplus " + std::to_string(w.surplus) +
                                 ", LP gap predicted " + std::to_string(expected_surplus));
    }
    return w;
}

void require_all_half_optimal(const Graph& g) {
    if (lp_value(g).twice() != static_cast<std::int64_t>(g.order())) {
        throw ContractViolation("all-1/2 is not an optimal LP solution of this graph");
    }
}

}  // namespace

SurplusWitness min_surplus_witness_containing(const Graph& g, VertexId v) {
    (void)g.index_of(v);
    require_all_half_optimal(g);
    auto [value, forced] = lp_value_forced_zero(g, v);
    std::int64_t surplus = value.twice() - static_cast<std::int64_t>(g.order());
    // Only the part of the uniqueness precondition that involves v is checked.
    if (surplus < 1) {
        throw ContractViolation("all-1/2 is not the unique LP optimum (an optimum sets vertex " +
                                std::to_string(v.value) + " to 0)");
    }
    return witness_from(g, forced, surplus);
}

SurplusQuery graph_surplus_if_small(const Graph& g) {
    require_all_half_optimal(g);
    for (VertexId v : g.vertices()) {
        auto [value, forced] = lp_value_forced_zero(g, v);
        std::int64_t surplus = value.twice() - static_cast<std::int64_t>(g.order());
        if (surplus < 1) {
            throw ContractViolation("all-1/2 is not the unique LP optimum of this graph");
        }
        if (surplus == 1) return SurplusQuery{witness_from(g, forced, 1)};
    }
    return SurplusQuery{};
}

namespace detail {

ExtremeAnalysis analyze_extreme(const Graph& g) {
    HalfIntegralSolution x = lp_optimum(g);
    for (;;) {
        VertexSet half = x.halves();
        Graph h = half.size() == g.order() ? g : induced_subgraph(g, half);
        const auto n = static_cast<std::int64_t>(h.order());
        std::optional<SurplusWitness> first;
        bool moved = false;
        for (VertexId v : h.vertices()) {
            auto [value, forced] = lp_value_forced_zero(h, v);
            // All-1/2 is optimal on G[V_half], so LP(h) = n/2 and the gap to
            // the forced optimum is half the minimum surplus through v.
            std::int64_t surplus = value.twice() - n;
            if (surplus < 0) {
                throw InvariantViolation("all-1/2 is not optimal on the half-valued part");
            }
            if (surplus == 0) {
                for (std::size_t i = 0; i < forced.vertices().size(); ++i) {
                    x.set(forced.vertices()[i], forced.values()[i]);
                }
                moved = true;
                break;
            }
            if (surplus == 1 && !first) first = witness_from(h, forced, 1);
        }
        if (!moved) return ExtremeAnalysis{std::move(x), std::move(first)};
    }
}

}  // namespace detail

HalfIntegralSolution lp_optimum_extreme(const Graph& g) {
    return detail::analyze_extreme(g).solution;
}

}  // namespace vcalp
