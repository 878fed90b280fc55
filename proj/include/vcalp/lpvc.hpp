#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcalp/graph.hpp"

namespace vcalp {

// Exact multiple of 1/2, stored doubled.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr std::int64_t ceil() const { return twice_ >= 0 ? (twice_ + 1) / 2 : twice_ / 2; }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }

    // "5/2", "3", "-1/2".
    std::string to_string() const;

    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }

private:
    constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

// Value of one LP variable, doubled: 0, 1 (for 1/2) or 2.
enum class Half : std::uint8_t { zero = 0, half = 1, one = 2 };

class HalfIntegralSolution {
public:
    HalfIntegralSolution() = default;
    HalfIntegralSolution(std::vector<VertexId> vertices, std::vector<Half> values);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Half>& values() const { return values_; }

    Half value_of(VertexId v) const;
    void set(VertexId v, Half h);

    HalfInt value() const;
    VertexSet zeros() const { return part(Half::zero); }
    VertexSet halves() const { return part(Half::half); }
    VertexSet ones() const { return part(Half::one); }
    bool all_half() const;

private:
    VertexSet part(Half h) const;

    std::vector<VertexId> vertices_;  // sorted
    std::vector<Half> values_;
};

// x_u + x_v >= 1 on every edge, and the solution ranges over exactly V(g).
bool is_feasible(const Graph& g, const HalfIntegralSolution& x);

// Optimal half-integral solution from a König cover of the bipartite double
// cover of g.
HalfIntegralSolution lp_optimum(const Graph& g);
HalfInt lp_value(const Graph& g);

// Optimal solution x for which all-1/2 is the unique optimum of the LP on
// G[V_half(x)].
HalfIntegralSolution lp_optimum_extreme(const Graph& g);

// Minimum LP value subject to x_v = 0, with a witnessing solution: v at 0,
// N(v) at 1, an optimum of g - N[v] elsewhere.
std::pair<HalfInt, HalfIntegralSolution> lp_value_forced_zero(const Graph& g, VertexId v);

struct SurplusWitness {
    VertexSet z;
    VertexSet neighborhood;
    std::int64_t surplus = 0;
};

// Minimum-surplus independent set containing v. Requires all-1/2 to be the
// unique LP optimum of g.
SurplusWitness min_surplus_witness_containing(const Graph& g, VertexId v);

// Result of graph_surplus_if_small: either a surplus-1 witness or the
// statement that surplus(g) >= 2.
struct SurplusQuery {
    std::optional<SurplusWitness> witness;

    bool at_least_two() const { return !witness.has_value(); }
};

// Requires all-1/2 to be the unique LP optimum of g (surplus >= 1).
SurplusQuery graph_surplus_if_small(const Graph& g);

namespace detail {

// Extreme optimum plus the first (ascending id) surplus-1 witness inside
// G[V_half], found during the final uniqueness scan.
struct ExtremeAnalysis {
    HalfIntegralSolution solution;
    std::optional<SurplusWitness> surplus_one;
};
ExtremeAnalysis analyze_extreme(const Graph& g);

}  // namespace detail

}  // namespace vcalp
