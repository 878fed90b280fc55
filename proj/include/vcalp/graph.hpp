#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace vcalp {

// Stable vertex identifier. Identifiers are never reused within a graph's
// lineage: deletions leave gaps and identification allocates a fresh one.
struct VertexId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const VertexId&) const = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);

// Unordered pair, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Simple undirected graph. Vertices are kept in ascending identifier order and
// every adjacency list is sorted, so iteration order only depends on the
// construction history.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1, no edges.
    explicit Graph(std::size_t n);

    VertexId add_vertex();

    // Duplicate edges collapse. Self-loops are a ContractViolation.
    void add_edge(VertexId a, VertexId b);

    std::size_t order() const { return ids_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return ids_.empty(); }

    std::span<const VertexId> vertices() const { return ids_; }
    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId a, VertexId b) const;

    // Lexicographic by (u, v).
    std::vector<Edge> edges() const;

    // Position of v in vertices(); throws InvalidVertex when absent.
    std::size_t index_of(VertexId v) const;

    // Adjacency over positions 0..order()-1, for the matching and LP kernels.
    std::vector<std::vector<int>> dense_adjacency() const;

    // Smallest identifier that has never been handed out in this lineage.
    std::uint32_t next_id() const { return next_id_; }

    bool operator==(const Graph& other) const {
        return ids_ == other.ids_ && adj_ == other.adj_;
    }

private:
    friend Graph induced_subgraph(const Graph& g, const VertexSet& keep);
    friend std::pair<Graph, VertexId> identify_set(const Graph& g, const VertexSet& s);

    void require(VertexId v) const;

    std::vector<VertexId> ids_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
    std::uint32_t next_id_ = 0;
};

VertexSet neighbors(const Graph& g, VertexId v);

// N(X): vertices outside X with a neighbour in X.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_vertices(const Graph& g, const VertexSet& drop);

// Removes s and adds a fresh vertex adjacent to exactly N(s). Returns the new
// graph and the fresh vertex.
std::pair<Graph, VertexId> identify_set(const Graph& g, const VertexSet& s);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
bool is_independent_set(const Graph& g, const VertexSet& s);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Builds a graph on vertices 0..n-1 from an edge list.
Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();

}  // namespace vcalp
