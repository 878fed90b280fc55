#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vcalp/gallai_edmonds.hpp"
#include "vcalp/graph.hpp"
#include "vcalp/lpvc.hpp"

// Deliberately naive reference implementations. Every function refuses
// (OracleRefusal) instead of running past its size cap.
namespace vcalp::oracle {

inline constexpr std::size_t default_opt_cap = 20;
inline constexpr std::size_t default_lp_cap = 12;
inline constexpr std::size_t default_surplus_cap = 12;
inline constexpr std::size_t default_gallai_edmonds_cap = 8;

struct CoverResult {
    std::size_t size = 0;
    VertexSet cover;
};

// Minimum vertex cover by subset enumeration in increasing size.
CoverResult brute_opt(const Graph& g, std::size_t cap = default_opt_cap);

// Maximum independent set by full subset enumeration; OPT = n - alpha.
std::size_t brute_independence_number(const Graph& g, std::size_t cap = default_opt_cap);

// Maximum matching size by exhaustive search.
std::size_t brute_matching_number(const Graph& g, std::size_t cap = default_gallai_edmonds_cap);

// Minimum of sum x_v over feasible x in {0, 1/2, 1}^V.
HalfInt brute_lp(const Graph& g, std::size_t cap = default_lp_cap);

// Minimum surplus over nonempty independent sets; nullopt for the empty graph.
std::optional<SurplusWitness> brute_surplus(const Graph& g, std::size_t cap = default_surplus_cap);
SurplusWitness brute_surplus_containing(const Graph& g, VertexId v,
                                        std::size_t cap = default_surplus_cap);

// O taken literally as the union of exposed sets over all maximum matchings.
GallaiEdmonds brute_gallai_edmonds(const Graph& g, std::size_t cap = default_gallai_edmonds_cap);

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9, z = (z ^ (z >> 27)) *
// 0x94D049BB133111EB, z ^ (z >> 31).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Top 53 bits as a double in [0, 1).
    double next_unit();

private:
    std::uint64_t state_;
};

// Erdos-Renyi G(n, p) on vertices 0..n-1. Pairs (i, j), i < j, are visited
// in lexicographic order and each draws one next_unit() < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Graph on vertices 0..n-1 whose edge set is the bitmask over pairs (i, j),
// i < j, in lexicographic order.
Graph labeled_graph(std::size_t n, std::uint64_t mask);

// Every labeled graph on vertices 0..n-1 (2^(n(n-1)/2) of them), in order of
// the edge bitmask.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn);

// One mask per isomorphism class of graphs on n <= 7 vertices: the smallest
// mask over all relabelings. Sorted ascending.
std::vector<std::uint64_t> isomorphism_classes(std::size_t n);

}  // namespace vcalp::oracle
