#include <doctest.h>

#include "test_support.hpp"
#include "vcalp/errors.hpp"
#include "vcalp/oracle.hpp"
#include "vcalp/reductions.hpp"

using namespace vcalp;
using vcalp::test::vid;
using vcalp::test::vset;

namespace {

std::int64_t opt(const Graph& g) { return static_cast<std::int64_t>(oracle::brute_opt(g).size); }

bool is_cycle(const Graph& g) {
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 2) return false;
    }
    return connected_components(g).size() == 1;
}

}  // namespace

TEST_CASE("budget measure") {
    const Budget b = Budget::of(cycle_graph(5), 3);
    CHECK(b.mm == 2);
    CHECK(b.lp2 == 5);
    CHECK(b.k_hat() == 0);
    CHECK(b.lp() == HalfInt::from_twice(5));
    CHECK(Budget::of(petersen_graph(), 6).k_hat() == 1);
}

TEST_CASE("C5 with k = 3 reduces to the empty graph") {
    const Graph c5 = cycle_graph(5);
    const ReductionResult r = reduce_exhaustively(c5, Budget::of(c5, 3));
    CHECK(r.graph.empty());
    CHECK(r.budget.k == 0);
    CHECK(r.applied == std::array<std::uint64_t, 3>{0, 1, 1});
    REQUIRE(r.trace.steps.size() == 2);

    const auto* first = std::get_if<Rule3Step>(&r.trace.steps[0].action);
    REQUIRE(first != nullptr);
    CHECK(first->z == vset({0}));
    CHECK(first->nz == vset({1, 4}));
    CHECK(first->merged == vid(5));
    CHECK(r.trace.steps[0].after.k == 2);

    const auto* second = std::get_if<Rule2Step>(&r.trace.steps[1].action);
    REQUIRE(second != nullptr);
    CHECK(second->z == vset({2}));
    CHECK(second->nz == vset({3, 5}));

    const VertexSet cover = lift_cover(r.trace, {});
    CHECK(cover.size() == 3);
    CHECK(is_vertex_cover(c5, cover));
}

TEST_CASE("rule 3 turns C7 into C5") {
    const Graph c7 = cycle_graph(7);
    REQUIRE_FALSE(apply_rule1(c7, Budget::of(c7, 4)));
    REQUIRE_FALSE(apply_rule2(c7, Budget::of(c7, 4)));
    const auto r = apply_rule3(c7, Budget::of(c7, 4));
    REQUIRE(r.has_value());
    CHECK(r->graph.order() == 5);
    CHECK(is_cycle(r->graph));
    CHECK(r->budget.k == 3);
    CHECK(r->budget.k_hat() == Budget::of(c7, 4).k_hat());
}

TEST_CASE("rule 2 on C5 with a chord") {
    // v1..v5 = 0..4, chord v2 - v5
    const Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
    const Budget b = Budget::of(g, 3);
    REQUIRE_FALSE(apply_rule1(g, b));
    CHECK_FALSE(apply_rule3(g, b));
    const auto r = apply_rule2(g, b);
    REQUIRE(r.has_value());
    const auto& step = std::get<Rule2Step>(r->step.action);
    CHECK(set_union(step.z, step.nz) == vset({0, 1, 4}));
    CHECK(r->graph == delete_vertices(g, vset({0, 1, 4})));
    CHECK(r->budget.k == 1);
}

TEST_CASE("rule 1 on a triangle with a vertex joined to two corners") {
    const Graph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto r = apply_rule1(g, Budget::of(g, 2));
    REQUIRE(r.has_value());
    const auto& step = std::get<Rule1Step>(r->step.action);
    CHECK(step.ones == vset({1, 2}));
    CHECK(step.zeros == vset({0, 3}));
    CHECK(r->graph.empty());
    CHECK(r->budget.k == 0);
    CHECK_FALSE(apply_rule2(g, Budget::of(g, 2)));
    CHECK_FALSE(apply_rule3(g, Budget::of(g, 2)));
}

TEST_CASE("no rule applies to a graph of surplus two") {
    const Graph k5 = complete_graph(5);
    const Budget b = Budget::of(k5, 4);
    CHECK_FALSE(apply_rule1(k5, b));
    CHECK_FALSE(apply_rule2(k5, b));
    CHECK_FALSE(apply_rule3(k5, b));
    const ReductionResult r = reduce_exhaustively(k5, b);
    CHECK(r.graph == k5);
    CHECK(r.trace.steps.empty());
}

TEST_CASE("every single reduction step preserves OPT - k on small graphs") {
    std::size_t steps = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            const Budget b = Budget::of(g, static_cast<std::int64_t>(n) / 2);
            std::optional<Reduced> r = apply_rule1(g, b);
            if (!r) r = apply_rule2(g, b);
            if (!r) r = apply_rule3(g, b);
            if (!r) return;
            ++steps;
            // safe for every k at once: the optimum moves exactly with the budget
            CHECK(opt(g) - b.k == opt(r->graph) - r->budget.k);
            CHECK(r->budget.k_hat() <= b.k_hat());
            CHECK(check_step_bounds(r->step).empty());
            CHECK(r->budget == Budget::of(r->graph, r->budget.k));
        });
    }
    CHECK(steps > 1000);
}

TEST_CASE("exhaustive reduction ends at surplus >= 2 and lifts optimal covers") {
    auto check = [](const Graph& g) {
        const std::int64_t k = opt(g);
        const ReductionResult r = reduce_exhaustively(g, Budget::of(g, k));
        if (!r.graph.empty()) {
            const auto s = oracle::brute_surplus(r.graph);
            REQUIRE(s.has_value());
            CHECK(s->surplus >= 2);
        }
        CHECK(r.budget.k_hat() <= Budget::of(g, k).k_hat());
        CHECK(opt(r.graph) == r.budget.k);
        const VertexSet lifted = lift_cover(r.trace, oracle::brute_opt(r.graph).cover);
        CHECK(is_vertex_cover(g, lifted));
        CHECK(static_cast<std::int64_t>(lifted.size()) == k);
        const std::uint64_t total = r.applied[0] + r.applied[1] + r.applied[2];
        CHECK(total == r.trace.steps.size());
    };
    for (std::size_t n = 1; n <= 5; ++n) oracle::for_each_labeled_graph(n, check);
    test::for_random_graphs(300, 6, 12, 4242, check);
}

TEST_CASE("lift_cover rejects covers of the wrong graph") {
    const Graph c5 = cycle_graph(5);
    const Graph c7 = cycle_graph(7);
    const ReductionResult r = reduce_exhaustively(c7, Budget::of(c7, 4));
    CHECK(r.graph.empty());
    CHECK_THROWS_AS(lift_cover(r.trace, vset({0})), ContractViolation);

    const ReductionResult k5 = reduce_exhaustively(complete_graph(5), Budget::of(complete_graph(5), 4));
    CHECK_THROWS_AS(lift_cover(k5.trace, vset({0, 1})), ContractViolation);
    CHECK(lift_cover(k5.trace, vset({0, 1, 2, 3})) == vset({0, 1, 2, 3}));
    (void)c5;
}

TEST_CASE("branch picks are lifted as taken vertices") {
    const Graph k5 = complete_graph(5);
    ReductionTrace trace{k5, k5, {}};
    const Graph child = delete_vertices(k5, vset({0, 1}));
    append_branch_pick(trace, vset({0, 1}), child);
    CHECK(trace.result == child);
    CHECK(lift_cover(trace, vset({2, 3})) == vset({0, 1, 2, 3}));
}

TEST_CASE("step bound checker flags forged steps") {
    const Budget before{5, 3, 6};
    CHECK(check_step_bounds({Rule1Step{vset({0}), {}}, before, Budget{4, 2, 4}}).empty());
    CHECK_FALSE(check_step_bounds({Rule1Step{vset({0}), {}}, before, Budget{4, 3, 4}}).empty());
    CHECK_FALSE(check_step_bounds({Rule2Step{vset({0}), vset({1, 2})}, before, Budget{3, 3, 2}}).empty());
    CHECK_FALSE(check_step_bounds({Rule3Step{vset({0}), vset({1, 2}), vid(9)}, before, Budget{5, 2, 4}}).empty());
    // LP falls further than the rule allows
    CHECK_FALSE(check_step_bounds({Rule3Step{vset({0}), vset({1, 2}), vid(9)}, before, Budget{4, 2, 2}}).empty());
}

TEST_CASE("rule 1 on a star and on an edgeless graph") {
    const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto r = apply_rule1(star, Budget::of(star, 1));
    REQUIRE(r.has_value());
    CHECK(r->graph.empty());
    CHECK(r->budget.k == 0);
    CHECK(std::get<Rule1Step>(r->step.action).ones == vset({0}));

    const Graph edgeless(4);
    const ReductionResult e = reduce_exhaustively(edgeless, Budget::of(edgeless, 2));
    CHECK(e.graph.empty());
    CHECK(e.budget.k == 2);

    const ReductionResult s = reduce_exhaustively(star, Budget::of(star, 1));
    CHECK(lift_cover(s.trace, {}) == vset({0}));
}

TEST_CASE("rules 2 and 3 do not fire on surplus-two graphs or odd cycles with independent neighbourhoods") {
    const Graph k4 = complete_graph(4);
    CHECK_FALSE(apply_rule1(k4, Budget::of(k4, 3)));
    CHECK_FALSE(apply_rule2(k4, Budget::of(k4, 3)));
    CHECK_FALSE(apply_rule3(k4, Budget::of(k4, 3)));
    const Graph c5 = cycle_graph(5);
    CHECK_FALSE(apply_rule1(c5, Budget::of(c5, 3)));
    CHECK_FALSE(apply_rule2(c5, Budget::of(c5, 3)));
}

TEST_CASE("rule 3 on C5 gives a triangle through the merged vertex") {
    const Graph c5 = cycle_graph(5);
    const auto r = apply_rule3(c5, Budget::of(c5, 3));
    REQUIRE(r.has_value());
    const auto& step = std::get<Rule3Step>(r->step.action);
    CHECK(step.z == vset({0}));
    CHECK(step.nz == vset({1, 4}));
    CHECK(test::all_vertices(r->graph) == vset({2, 3, 5}));
    CHECK(r->graph.size() == 3);
    CHECK(r->budget.k == 2);

    // a cover of the triangle containing the merged vertex lifts through N(Z)
    const ReductionTrace trace{c5, r->graph, {r->step}};
    CHECK(lift_cover(trace, vset({2, 5})) == vset({1, 2, 4}));
    // and one avoiding it lifts through Z
    CHECK(lift_cover(trace, vset({2, 3})) == vset({0, 2, 3}));
    // the empty trace is the identity
    const ReductionTrace none{c5, c5, {}};
    CHECK(lift_cover(none, vset({0, 2, 3})) == vset({0, 2, 3}));
}

TEST_CASE("single reduction steps preserve OPT - k on random graphs up to 8 vertices") {
    std::size_t steps = 0;
    test::for_random_graphs(600, 7, 8, 8080, [&](const Graph& g) {
        const Budget b = Budget::of(g, 4);
        std::optional<Reduced> r = apply_rule1(g, b);
        if (!r) r = apply_rule2(g, b);
        if (!r) r = apply_rule3(g, b);
        if (!r) return;
        ++steps;
        CHECK(opt(g) - b.k == opt(r->graph) - r->budget.k);
        CHECK(check_step_bounds(r->step).empty());
    });
    CHECK(steps > 100);
}
