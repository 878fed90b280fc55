#include "vcalp/gallai_edmonds.hpp"

#include <algorithm>

#include "vcalp/errors.hpp"
#include "vcalp/matching.hpp"

namespace vcalp {

namespace {

std::size_t matched_count(const std::vector<int>& mates) {
    return static_cast<std::size_t>(
        std::count_if(mates.begin(), mates.end(), [](int m) { return m != -1; }));
}

// Dense adjacency with one position removed, keeping the remaining indices.
std::vector<std::vector<int>> without(const std::vector<std::vector<int>>& adj, int drop) {
    std::vector<std::vector<int>> out(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (static_cast<int>(i) == drop) continue;
        for (int w : adj[i]) {
            if (w != drop) out[i].push_back(w);
        }
    }
    return out;
}

std::optional<Edge> smallest_edge_within(const Graph& g, const VertexSet& part) {
    for (VertexId a : part) {
        for (VertexId b : g.neighbors(a)) {
            if (a < b && set_contains(part, b)) return Edge(a, b);
        }
    }
    return std::nullopt;
}

}  // namespace

GallaiEdmonds decompose(const Graph& g) {
    auto adj = g.dense_adjacency();
    const std::size_t matched = matched_count(detail::blossom_mates(adj));
    auto ids = g.vertices();

    GallaiEdmonds d;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (matched_count(detail::blossom_mates(without(adj, static_cast<int>(i)))) == matched) {
            d.outer.push_back(ids[i]);
        }
    }
    d.inner = neighborhood_of_set(g, d.outer);
    VertexSet all(ids.begin(), ids.end());
    d.perfect = set_difference(set_difference(all, d.outer), d.inner);
    d.outer_components = connected_components(induced_subgraph(g, d.outer));
    return d;
}

bool is_factor_critical(const Graph& g) {
    auto adj = g.dense_adjacency();
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (matched_count(detail::blossom_mates(without(adj, static_cast<int>(i)))) !=
            adj.size() - 1) {
            return false;
        }
    }
    return true;
}

BranchVertex find_branch_vertex(const Graph& g, const GallaiEdmonds& d) {
    VertexSet rest = set_union(d.inner, d.perfect);
    if (smallest_edge_within(g, rest)) {
        throw ContractViolation("find_branch_vertex: I + P is not independent");
    }
    for (VertexId u : d.outer) {
        VertexSet outer_nbrs;
        for (VertexId w : g.neighbors(u)) {
            if (set_contains(d.outer, w)) outer_nbrs.push_back(w);
        }
        if (outer_nbrs.size() >= 2) return BranchVertex{u, outer_nbrs[0], outer_nbrs[1]};
    }
    throw ContractViolation("find_branch_vertex: no vertex of O has two neighbours in O");
}

std::optional<Edge> find_inner_edge(const Graph& g, const GallaiEdmonds& d) {
    return smallest_edge_within(g, set_union(d.inner, d.perfect));
}

std::optional<Edge> find_perfect_part_edge(const Graph& g, const GallaiEdmonds& d) {
    return smallest_edge_within(g, d.perfect);
}

}  // namespace vcalp
