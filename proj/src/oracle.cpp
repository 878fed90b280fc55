#include "vcalp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "vcalp/errors.hpp"

namespace vcalp::oracle {

namespace {

using Mask = std::uint64_t;

void refuse_above(const Graph& g, std::size_t cap, const char* what) {
    if (g.order() > cap || g.order() > 40) {
        throw OracleRefusal(std::string(what) + ": " + std::to_string(g.order()) +
                            " vertices exceeds the cap of " + std::to_string(cap));
    }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    auto adj = g.dense_adjacency();
    std::vector<Mask> out(adj.size(), 0);
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (int w : adj[i]) out[i] |= Mask{1} << w;
    }
    return out;
}

VertexSet to_set(const Graph& g, Mask m) {
    VertexSet out;
    auto ids = g.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (m >> i & 1) out.push_back(ids[i]);
    }
    return out;
}

Mask neighborhood(const std::vector<Mask>& adj, Mask s) {
    Mask n = 0;
    for (Mask rest = s; rest; rest &= rest - 1) n |= adj[std::countr_zero(rest)];
    return n & ~s;
}

bool independent(const std::vector<Mask>& adj, Mask s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
        if (adj[std::countr_zero(rest)] & s) return false;
    }
    return true;
}

}  // namespace

CoverResult brute_opt(const Graph& g, std::size_t cap) {
    refuse_above(g, cap, "brute_opt");
    const std::size_t n = g.order();
    auto adj = adjacency_masks(g);
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    auto covers = [&](Mask s) {
        for (Mask out = full & ~s; out; out &= out - 1) {
            if (adj[std::countr_zero(out)] & ~s) return false;
        }
        return true;
    };
    for (std::size_t size = 0; size <= n; ++size) {
        if (size == 0) {
            if (covers(0)) return CoverResult{0, {}};
            continue;
        }
        // Gosper's hack over all size-element subsets.
        Mask s = (Mask{1} << size) - 1;
        while (s <= full) {
            if (covers(s)) return CoverResult{size, to_set(g, s)};
            Mask c = s & (~s + 1);
            Mask r = s + c;
            if (r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return CoverResult{n, to_set(g, full)};
}

std::size_t brute_independence_number(const Graph& g, std::size_t cap) {
    refuse_above(g, cap, "brute_independence_number");
    auto adj = adjacency_masks(g);
    const Mask count = Mask{1} << g.order();
    int best = 0;
    for (Mask s = 0; s < count; ++s) {
        int size = std::popcount(s);
        if (size > best && independent(adj, s)) best = size;
    }
    return static_cast<std::size_t>(best);
}

std::size_t brute_matching_number(const Graph& g, std::size_t cap) {
    refuse_above(g, cap, "brute_matching_number");
    auto adj = adjacency_masks(g);
    auto best = [&](auto&& self, Mask free) -> std::size_t {
        if (free == 0) return 0;
        int v = std::countr_zero(free);
        Mask rest = free & ~(Mask{1} << v);
        std::size_t result = self(self, rest);
        for (Mask cand = adj[v] & rest; cand; cand &= cand - 1) {
            int w = std::countr_zero(cand);
            result = std::max(result, 1 + self(self, rest & ~(Mask{1} << w)));
        }
        return result;
    };
    return best(best, (Mask{1} << g.order()) - 1);
}

HalfInt brute_lp(const Graph& g, std::size_t cap) {
    refuse_above(g, cap, "brute_lp");
    const std::size_t n = g.order();
    auto adj = g.dense_adjacency();
    std::vector<int> x(n, 0);
    std::int64_t best = 2 * static_cast<std::int64_t>(n);
    // Assign vertices in order; each value is checked against earlier
    // neighbours, and partial sums that already reach the best are cut.
    auto go = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        if (sum >= best) return;
        if (i == n) {
            best = sum;
            return;
        }
        for (int value = 0; value <= 2; ++value) {
            bool ok = true;
            for (int w : adj[i]) {
                if (static_cast<std::size_t>(w) < i && x[w] + value < 2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            x[i] = value;
            self(self, i + 1, sum + value);
        }
    };
    go(go, 0, 0);
    return HalfInt::from_twice(best);
}

std::optional<SurplusWitness> brute_surplus(const Graph& g, std::size_t cap) {
    refuse_above(g, cap, "brute_surplus");
    if (g.empty()) return std::nullopt;
    auto adj = adjacency_masks(g);
    const Mask count = Mask{1} << g.order();
    std::optional<std::pair<std::int64_t, Mask>> best;
    for (Mask s = 1; s < count; ++s) {
        if (!independent(adj, s)) continue;
        std::int64_t surplus = std::popcount(neighborhood(adj, s)) - std::popcount(s);
        if (!best || surplus < best->first) best = {surplus, s};
    }
    return SurplusWitness{to_set(g, best->second), to_set(g, neighborhood(adj, best->second)),
                          best->first};
}

SurplusWitness brute_surplus_containing(const Graph& g, VertexId v, std::size_t cap) {
    refuse_above(g, cap, "brute_surplus_containing");
    const Mask bit = Mask{1} << g.index_of(v);
    auto adj = adjacency_masks(g);
    const Mask count = Mask{1} << g.order();
    std::optional<std::pair<std::int64_t, Mask>> best;
    for (Mask s = 1; s < count; ++s) {
        if (!(s & bit) || !independent(adj, s)) continue;
        std::int64_t surplus = std::popcount(neighborhood(adj, s)) - std::popcount(s);
        if (!best || surplus < best->first) best = {surplus, s};
    }
    return SurplusWitness{to_set(g, best->second), to_set(g, neighborhood(adj, best->second)),
                          best->first};
}

GallaiEdmonds brute_gallai_edmonds(const Graph& g, std::size_t cap) {
    refuse_above(g, cap, "brute_gallai_edmonds");
    auto adj = adjacency_masks(g);
    const Mask all = (Mask{1} << g.order()) - 1;
    int best_size = -1;
    Mask exposed_by_some_max = 0;
    // Enumerates every matching: the smallest undecided vertex is either left
    // exposed or matched to a larger undecided neighbour.
    auto go = [&](auto&& self, Mask undecided, Mask exposed, int size) -> void {
        if (undecided == 0) {
            if (size > best_size) {
                best_size = size;
                exposed_by_some_max = exposed;
            } else if (size == best_size) {
                exposed_by_some_max |= exposed;
            }
            return;
        }
        int v = std::countr_zero(undecided);
        Mask rest = undecided & ~(Mask{1} << v);
        self(self, rest, exposed | (Mask{1} << v), size);
        for (Mask cand = adj[v] & rest; cand; cand &= cand - 1) {
            int w = std::countr_zero(cand);
            self(self, rest & ~(Mask{1} << w), exposed, size + 1);
        }
    };
    go(go, all, 0, 0);

    GallaiEdmonds d;
    Mask outer = g.empty() ? 0 : exposed_by_some_max;
    Mask inner = neighborhood(adj, outer);
    d.outer = to_set(g, outer);
    d.inner = to_set(g, inner);
    d.perfect = to_set(g, all & ~outer & ~inner);
    d.outer_components = connected_components(induced_subgraph(g, d.outer));
    return d;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.next_unit() < p) {
                g.add_edge(VertexId{static_cast<std::uint32_t>(i)},
                           VertexId{static_cast<std::uint32_t>(j)});
            }
        }
    }
    return g;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> vertex_pairs(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

void require_small_labeled(std::size_t n) {
    if (n > 11) throw OracleRefusal("labeled graphs: " + std::to_string(n) + " vertices exceeds 11");
}

}  // namespace

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
    require_small_labeled(n);
    const auto pairs = vertex_pairs(n);
    if (pairs.size() < 64 && (mask >> pairs.size()) != 0) {
        throw ContractViolation("labeled_graph: mask has bits beyond the vertex pairs");
    }
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1) g.add_edge(VertexId{pairs[e].first}, VertexId{pairs[e].second});
    }
    return g;
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
    require_small_labeled(n);
    const std::uint64_t count = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(labeled_graph(n, mask));
}

std::vector<std::uint64_t> isomorphism_classes(std::size_t n) {
    if (n > 7) throw OracleRefusal("isomorphism classes: " + std::to_string(n) + " vertices exceeds 7");
    if (n == 0) return {0};

    // index of pair (i, j) in the mask, for both orders
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    const auto pairs = vertex_pairs(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        pair_index[pairs[e].first][pairs[e].second] = static_cast<int>(e);
        pair_index[pairs[e].second][pairs[e].first] = static_cast<int>(e);
    }
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    auto canonical = [&](std::uint64_t mask) {
        std::uint64_t best = mask;
        for (const auto& p : perms) {
            std::uint64_t image = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (mask >> e & 1) image |= std::uint64_t{1} << pair_index[p[pairs[e].first]][p[pairs[e].second]];
            }
            best = std::min(best, image);
        }
        return best;
    };

    // Every graph on n vertices is a graph on n - 1 vertices plus vertex n - 1
    // with some neighbourhood.
    std::vector<std::uint64_t> out;
    for (std::uint64_t smaller : isomorphism_classes(n - 1)) {
        std::uint64_t base = 0;
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if (pairs[e].second == n - 1) continue;
            // position of (i, j) among the pairs of n - 1 vertices
            const std::uint32_t i = pairs[e].first, j = pairs[e].second;
            const std::size_t small_index = i * (2 * (n - 1) - i - 1) / 2 + (j - i - 1);
            if (smaller >> small_index & 1) base |= std::uint64_t{1} << e;
        }
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
            std::uint64_t mask = base;
            for (std::uint32_t v = 0; v + 1 < n; ++v) {
                if (nbrs >> v & 1) mask |= std::uint64_t{1} << pair_index[v][n - 1];
            }
            out.push_back(canonical(mask));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace vcalp::oracle
