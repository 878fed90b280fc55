#pragma once

#include <cstddef>
#include <vector>

#include "vcalp/graph.hpp"

namespace vcalp {

struct Matching {
    std::vector<Edge> edges;  // sorted

    std::size_t size() const { return edges.size(); }
    VertexSet saturated() const;
    VertexSet exposed(const Graph& g) const;
};

// True when every edge is in g and no two edges share an endpoint.
bool is_matching(const Graph& g, const Matching& m);

// Maximum cardinality matching in a general graph (Edmonds' blossom
// algorithm, O(V^3)). Free vertices are grown in ascending id order.
Matching maximum_matching(const Graph& g);

std::size_t matching_number(const Graph& g);

// Same as matching_number(g) == order()/2 with even order, without building
// edge lists.
bool has_perfect_matching(const Graph& g);

// Maximum matching of a bipartite graph given as a vertex bipartition.
// Throws ContractViolation unless (left, right) partitions V(g) and every
// edge crosses it.
Matching bipartite_maximum_matching(const Graph& g, const VertexSet& left, const VertexSet& right);

// Minimum vertex cover of the same bipartite graph by König's construction;
// its size equals the maximum matching size.
VertexSet konig_vertex_cover(const Graph& g, const VertexSet& left, const VertexSet& right);

namespace detail {

// Blossom kernel over dense adjacency. Returns mate[] with -1 for exposed.
std::vector<int> blossom_mates(const std::vector<std::vector<int>>& adj);

// Hopcroft-Karp over a left/right dense bipartite graph. adj[l] lists right
// indices. Returns mate_left (right index or -1).
struct BipartiteMates {
    std::vector<int> left;
    std::vector<int> right;
    std::size_t size = 0;
};
BipartiteMates hopcroft_karp(const std::vector<std::vector<int>>& adj, std::size_t right_count);

// König cover from a maximum matching: (in_cover_left, in_cover_right).
std::pair<std::vector<bool>, std::vector<bool>> konig_cover(
    const std::vector<std::vector<int>>& adj, const BipartiteMates& mates);

}  // namespace detail

}  // namespace vcalp
