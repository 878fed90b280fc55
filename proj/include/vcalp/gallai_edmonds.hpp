#pragma once

#include <optional>
#include <vector>

#include "vcalp/graph.hpp"

namespace vcalp {

// V = O + I + P where O holds the vertices left exposed by some maximum
// matching, I = N(O) and P is the rest.
struct GallaiEdmonds {
    VertexSet outer;                       // O
    VertexSet inner;                       // I
    VertexSet perfect;                     // P
    std::vector<VertexSet> outer_components;  // components of G[O], by smallest member

    bool operator==(const GallaiEdmonds&) const = default;
};

// O is found by testing MM(g - v) == MM(g) for every vertex.
GallaiEdmonds decompose(const Graph& g);

// Every single-vertex deletion leaves a graph with a perfect matching.
bool is_factor_critical(const Graph& g);

struct BranchVertex {
    VertexId u;
    VertexId v;
    VertexId w;
};

// Smallest u in O with two O-neighbours, and its two smallest O-neighbours.
// Requires I + P to be independent in g; throws ContractViolation otherwise
// or when no such vertex exists.
BranchVertex find_branch_vertex(const Graph& g, const GallaiEdmonds& d);

// Lexicographically smallest edge of G[I + P], if any.
std::optional<Edge> find_inner_edge(const Graph& g, const GallaiEdmonds& d);

// Lexicographically smallest edge of G[P], if any.
std::optional<Edge> find_perfect_part_edge(const Graph& g, const GallaiEdmonds& d);

}  // namespace vcalp
