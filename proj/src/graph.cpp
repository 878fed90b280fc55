#include "vcalp/graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "vcalp/errors.hpp"

namespace vcalp {

std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

VertexSet make_vertex_set(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

Graph::Graph(std::size_t n) : adj_(n) {
    ids_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids_.push_back(VertexId{static_cast<std::uint32_t>(i)});
    next_id_ = static_cast<std::uint32_t>(n);
}

VertexId Graph::add_vertex() {
    VertexId v{next_id_++};
    ids_.push_back(v);
    adj_.emplace_back();
    return v;
}

void Graph::add_edge(VertexId a, VertexId b) {
    if (a == b) {
        throw ContractViolation("self-loop on vertex " + std::to_string(a.value));
    }
    auto& na = adj_[index_of(a)];
    auto& nb = adj_[index_of(b)];
    auto pos = std::lower_bound(na.begin(), na.end(), b);
    if (pos != na.end() && *pos == b) return;
    na.insert(pos, b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const { return adj_[index_of(v)]; }

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    const auto& na = adj_[index_of(a)];
    require(b);
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        for (VertexId w : adj_[i]) {
            if (ids_[i] < w) out.emplace_back(ids_[i], w);
        }
    }
    return out;
}

std::size_t Graph::index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) {
        throw InvalidVertex("vertex " + std::to_string(v.value) + " is not in the graph");
    }
    return static_cast<std::size_t>(it - ids_.begin());
}

void Graph::require(VertexId v) const { (void)index_of(v); }

std::vector<std::vector<int>> Graph::dense_adjacency() const {
    std::vector<std::vector<int>> out(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        out[i].reserve(adj_[i].size());
        // Both lists are sorted, so a merge walk maps ids to positions.
        std::size_t j = 0;
        for (VertexId w : adj_[i]) {
            while (ids_[j] < w) ++j;
            out[i].push_back(static_cast<int>(j));
        }
    }
    return out;
}

VertexSet neighbors(const Graph& g, VertexId v) {
    auto span = g.neighbors(v);
    return VertexSet(span.begin(), span.end());
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x) {
    std::vector<VertexId> out;
    for (VertexId v : x) {
        for (VertexId w : g.neighbors(v)) {
            if (!set_contains(x, w)) out.push_back(w);
        }
    }
    return make_vertex_set(std::move(out));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Graph out;
    out.next_id_ = g.next_id_;
    out.ids_.reserve(keep.size());
    out.adj_.reserve(keep.size());
    std::size_t twice_edges = 0;
    for (VertexId v : keep) {
        auto nbrs = g.neighbors(v);
        out.ids_.push_back(v);
        auto& list = out.adj_.emplace_back();
        for (VertexId w : nbrs) {
            if (set_contains(keep, w)) list.push_back(w);
        }
        twice_edges += list.size();
    }
    out.edge_count_ = twice_edges / 2;
    return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& drop) {
    for (VertexId v : drop) (void)g.index_of(v);
    VertexSet all(g.vertices().begin(), g.vertices().end());
    return induced_subgraph(g, set_difference(all, drop));
}

std::pair<Graph, VertexId> identify_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw ContractViolation("identify_set needs a nonempty set");
    VertexSet outside = neighborhood_of_set(g, s);
    Graph out = delete_vertices(g, s);
    VertexId z = out.add_vertex();
    auto& zl = out.adj_.back();
    zl = outside;
    for (VertexId w : outside) {
        auto& wl = out.adj_[out.index_of(w)];
        wl.insert(std::lower_bound(wl.begin(), wl.end(), z), z);
    }
    out.edge_count_ += outside.size();
    return {std::move(out), z};
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
    for (const Edge& e : g.edges()) {
        if (!set_contains(cover, e.u) && !set_contains(cover, e.v)) return false;
    }
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (VertexId v : s) {
        for (VertexId w : g.neighbors(v)) {
            if (set_contains(s, w)) return false;
        }
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    auto adj = g.dense_adjacency();
    auto ids = g.vertices();
    std::vector<int> comp(ids.size(), -1);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (std::size_t s = 0; s < ids.size(); ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        auto& members = out.emplace_back();
        comp[s] = c;
        stack.push_back(static_cast<int>(s));
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(ids[v]);
            for (int w : adj[v]) {
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
    }
    return out;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(VertexId{static_cast<std::uint32_t>(a)}, VertexId{static_cast<std::uint32_t>(b)});
    }
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(VertexId{i}, VertexId{j});
    }
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ContractViolation("cycle_graph: needs at least 3 vertices");
    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        g.add_edge(VertexId{i}, VertexId{static_cast<std::uint32_t>((i + 1) % n)});
    }
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (std::uint32_t i = 0; i < 5; ++i) {
        g.add_edge(VertexId{i}, VertexId{(i + 1) % 5});
        g.add_edge(VertexId{i}, VertexId{i + 5});
        g.add_edge(VertexId{i + 5}, VertexId{(i + 2) % 5 + 5});
    }
    return g;
}

}  // namespace vcalp
