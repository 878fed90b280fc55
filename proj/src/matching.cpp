#include "vcalp/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "vcalp/errors.hpp"

namespace vcalp {

VertexSet Matching::saturated() const {
    std::vector<VertexId> out;
    out.reserve(2 * edges.size());
    for (const Edge& e : edges) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    return make_vertex_set(std::move(out));
}

VertexSet Matching::exposed(const Graph& g) const {
    VertexSet all(g.vertices().begin(), g.vertices().end());
    return set_difference(all, saturated());
}

bool is_matching(const Graph& g, const Matching& m) {
    std::vector<VertexId> seen;
    for (const Edge& e : m.edges) {
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v)) return false;
        seen.push_back(e.u);
        seen.push_back(e.v);
    }
    std::size_t n = seen.size();
    return make_vertex_set(std::move(seen)).size() == n;
}

namespace detail {

namespace {

class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), mate_(n_, -1), parent_(n_),
          base_(n_), used_(n_), in_blossom_(n_), lca_mark_(n_) {}

    std::vector<int> run() {
        // Greedy start; augmentations then only fix what it missed.
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            for (int w : adj_[v]) {
                if (mate_[w] == -1) {
                    mate_[v] = w;
                    mate_[w] = v;
                    break;
                }
            }
        }
        for (int root = 0; root < n_; ++root) {
            if (mate_[root] != -1) continue;
            int v = find_augmenting_path(root);
            while (v != -1) {
                int pv = parent_[v];
                int ppv = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = ppv;
            }
        }
        return std::move(mate_);
    }

private:
    int lowest_common_ancestor(int a, int b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), false);
        for (;;) {
            a = base_[a];
            lca_mark_[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (lca_mark_[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int b = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = true;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
    std::vector<bool> lca_mark_;
};

}  // namespace

std::vector<int> blossom_mates(const std::vector<std::vector<int>>& adj) {
    return Blossom(adj).run();
}

BipartiteMates hopcroft_karp(const std::vector<std::vector<int>>& adj, std::size_t right_count) {
    const int nl = static_cast<int>(adj.size());
    constexpr int inf = std::numeric_limits<int>::max();
    BipartiteMates m;
    m.left.assign(nl, -1);
    m.right.assign(right_count, -1);
    std::vector<int> dist(nl);

    auto bfs = [&] {
        std::queue<int> q;
        bool found = false;
        for (int l = 0; l < nl; ++l) {
            if (m.left[l] == -1) {
                dist[l] = 0;
                q.push(l);
            } else {
                dist[l] = inf;
            }
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj[l]) {
                int next = m.right[r];
                if (next == -1) {
                    found = true;
                } else if (dist[next] == inf) {
                    dist[next] = dist[l] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    };

    std::vector<std::size_t> cursor(nl);
    auto dfs = [&](auto&& self, int l) -> bool {
        for (std::size_t& i = cursor[l]; i < adj[l].size(); ++i) {
            int r = adj[l][i];
            int next = m.right[r];
            if (next == -1 || (dist[next] == dist[l] + 1 && self(self, next))) {
                m.left[l] = r;
                m.right[r] = l;
                return true;
            }
        }
        dist[l] = inf;
        return false;
    };

    while (bfs()) {
        std::fill(cursor.begin(), cursor.end(), 0);
        for (int l = 0; l < nl; ++l) {
            if (m.left[l] == -1 && dfs(dfs, l)) ++m.size;
        }
    }
    return m;
}

std::pair<std::vector<bool>, std::vector<bool>> konig_cover(
    const std::vector<std::vector<int>>& adj, const BipartiteMates& mates) {
    const std::size_t nl = adj.size();
    std::vector<bool> reach_left(nl, false);
    std::vector<bool> reach_right(mates.right.size(), false);
    std::queue<int> q;
    for (std::size_t l = 0; l < nl; ++l) {
        if (mates.left[l] == -1) {
            reach_left[l] = true;
            q.push(static_cast<int>(l));
        }
    }
    // Alternating search: any edge left->right, matched edge right->left.
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int r : adj[l]) {
            if (reach_right[r]) continue;
            reach_right[r] = true;
            int next = mates.right[r];
            if (next != -1 && !reach_left[next]) {
                reach_left[next] = true;
                q.push(next);
            }
        }
    }
    std::vector<bool> cover_left(nl);
    for (std::size_t l = 0; l < nl; ++l) cover_left[l] = !reach_left[l];
    return {std::move(cover_left), std::move(reach_right)};
}

}  // namespace detail

Matching maximum_matching(const Graph& g) {
    auto mates = detail::blossom_mates(g.dense_adjacency());
    auto ids = g.vertices();
    Matching m;
    for (std::size_t i = 0; i < mates.size(); ++i) {
        if (mates[i] > static_cast<int>(i)) m.edges.emplace_back(ids[i], ids[mates[i]]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

std::size_t matching_number(const Graph& g) {
    auto mates = detail::blossom_mates(g.dense_adjacency());
    return static_cast<std::size_t>(std::count_if(mates.begin(), mates.end(),
                                                  [](int m) { return m != -1; })) /
           2;
}

bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return 2 * matching_number(g) == g.order();
}

namespace {

struct BipartiteView {
    std::vector<std::vector<int>> adj;  // left position -> right positions
    const VertexSet* left;
    const VertexSet* right;
};

BipartiteView bipartite_view(const Graph& g, const VertexSet& left, const VertexSet& right) {
    if (!set_intersection(left, right).empty() || left.size() + right.size() != g.order()) {
        throw ContractViolation("left/right do not partition the vertex set");
    }
    BipartiteView view{std::vector<std::vector<int>>(left.size()), &left, &right};
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (VertexId w : g.neighbors(left[i])) {
            auto it = std::lower_bound(right.begin(), right.end(), w);
            if (it == right.end() || *it != w) {
                throw ContractViolation("edge inside the left side of a bipartition");
            }
            view.adj[i].push_back(static_cast<int>(it - right.begin()));
        }
    }
    for (VertexId r : right) {
        for (VertexId w : g.neighbors(r)) {
            if (set_contains(right, w)) {
                throw ContractViolation("edge inside the right side of a bipartition");
            }
        }
    }
    return view;
}

}  // namespace

Matching bipartite_maximum_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
    auto view = bipartite_view(g, left, right);
    auto mates = detail::hopcroft_karp(view.adj, right.size());
    Matching m;
    for (std::size_t l = 0; l < left.size(); ++l) {
        if (mates.left[l] != -1) m.edges.emplace_back(left[l], right[mates.left[l]]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

VertexSet konig_vertex_cover(const Graph& g, const VertexSet& left, const VertexSet& right) {
    auto view = bipartite_view(g, left, right);
    auto mates = detail::hopcroft_karp(view.adj, right.size());
    auto [cl, cr] = detail::konig_cover(view.adj, mates);
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (cl[i]) out.push_back(left[i]);
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
        if (cr[i]) out.push_back(right[i]);
    }
    return make_vertex_set(std::move(out));
}

}  // namespace vcalp
