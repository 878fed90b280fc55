#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vcalp/graph.hpp"

// Oracle-equivalence and invariant sweep over a reproducible corpus: every
// labeled graph up to one size, one graph per isomorphism class up to a
// second size, and seeded random graphs.
namespace vcalp::verify {

enum class Criterion : std::size_t {
    oracle_exhaustive,
    oracle_random,
    bound_chain,
    reduction_safety,
    reduced_surplus,
    measure_drop,
    node_bound,
    gallai_edmonds,
    certificates,
    named_instances,
};
inline constexpr std::size_t criterion_count = 10;

std::string name(Criterion c);

struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    // (instance index, message); sorted by index, capped.
    std::vector<std::pair<std::uint64_t, std::string>> failures;

    bool passed() const { return failed == 0; }
};

struct Config {
    std::size_t labeled_max_n = 6;
    std::size_t class_max_n = 7;
    std::size_t random_samples = 5000;
    std::size_t random_min_n = 8;
    std::size_t random_max_n = 12;
    std::vector<double> densities{0.2, 0.4, 0.6};
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::size_t gallai_edmonds_cap = 8;
    std::size_t surplus_cap = 12;
    // size cap for the brute-force LP and matching oracles
    std::size_t oracle_cap = 12;
    std::size_t failures_kept = 20;
};

struct Report {
    std::array<Tally, criterion_count> tallies{};
    std::uint64_t instances = 0;
    std::uint64_t solves = 0;
    // max nodes / 3^k_hat0 over solves with k_hat0 >= 0
    double max_node_ratio = 0.0;
    std::uint64_t max_depth_seen = 0;

    Tally& operator[](Criterion c) { return tallies[static_cast<std::size_t>(c)]; }
    const Tally& operator[](Criterion c) const { return tallies[static_cast<std::size_t>(c)]; }
    bool passed() const;
};

struct Instance {
    Graph graph;
    std::string label;  // enough to regenerate the graph
    bool exhaustive = false;
};

// Instances in a fixed order: labeled graphs by (n, mask), isomorphism class
// representatives for labeled_max_n < n <= class_max_n, then random graphs.
class Corpus {
public:
    explicit Corpus(const Config& cfg);

    std::uint64_t size() const;
    Instance instance(std::uint64_t index) const;

private:
    Config cfg_;
    std::vector<std::pair<std::size_t, std::uint64_t>> class_masks_;  // (n, mask)
    std::uint64_t labeled_count_ = 0;
};

// Runs every per-instance check on one graph and accumulates into `report`.
void check_instance(const Config& cfg, const Instance& inst, std::uint64_t index, Report& report);

// The three fixed instances (K5, Petersen, C5) with their bounds and answers.
Tally check_named_instances();

// Sweeps the whole corpus, optionally with several worker threads. The
// result does not depend on the number of jobs.
Report run(const Config& cfg);

}  // namespace vcalp::verify
