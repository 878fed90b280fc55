#include <doctest.h>

#include "test_support.hpp"
#include "vcalp/errors.hpp"
#include "vcalp/oracle.hpp"
#include "vcalp/verify.hpp"

using namespace vcalp;
using namespace vcalp::verify;

namespace {

Config small_config() {
    Config cfg;
    cfg.labeled_max_n = 4;
    cfg.class_max_n = 5;
    cfg.random_samples = 30;
    cfg.random_min_n = 8;
    cfg.random_max_n = 10;
    cfg.seed = 99;
    return cfg;
}

}  // namespace

TEST_CASE("corpus layout") {
    const Config cfg = small_config();
    const Corpus corpus(cfg);
    // 1 + 1 + 2 + 8 + 64 labeled, 34 classes on 5 vertices, 30 random
    CHECK(corpus.size() == 76 + 34 + 30);
    const Instance first = corpus.instance(0);
    CHECK(first.graph.order() == 0);
    CHECK(first.exhaustive);
    const Instance last_labeled = corpus.instance(75);
    CHECK(last_labeled.graph == complete_graph(4));
    CHECK(last_labeled.label == "labeled n=4 mask=63");
    const Instance cls = corpus.instance(76);
    CHECK(cls.graph.order() == 5);
    CHECK(cls.graph.size() == 0);
    CHECK(cls.exhaustive);

    const Instance r = corpus.instance(76 + 34 + 4);
    CHECK_FALSE(r.exhaustive);
    // index 4 among the random graphs: n = 8 + (4 / 3) % 3, p = densities[4 % 3]
    CHECK(r.graph == oracle::random_graph(9, 0.4, 99 + 4));
    CHECK(r.label == "random n=9 p=0.4 seed=103");
    CHECK_THROWS_AS(corpus.instance(corpus.size()), ContractViolation);
}

TEST_CASE("corpus configuration is validated") {
    Config cfg = small_config();
    cfg.random_min_n = 12;
    cfg.random_max_n = 8;
    CHECK_THROWS_AS(Corpus{cfg}, ContractViolation);
    cfg = small_config();
    cfg.densities.clear();
    CHECK_THROWS_AS(Corpus{cfg}, ContractViolation);
}

TEST_CASE("a small sweep passes every criterion") {
    const Report r = run(small_config());
    CHECK(r.passed());
    CHECK(r.instances == 140);
    for (std::size_t c = 0; c < criterion_count; ++c) {
        INFO(name(static_cast<Criterion>(c)));
        CHECK(r.tallies[c].checked > 0);
        CHECK(r.tallies[c].failed == 0);
    }
    CHECK(r.max_node_ratio > 0.0);
}

TEST_CASE("results do not depend on the number of jobs") {
    Config one = small_config();
    Config three = small_config();
    three.jobs = 3;
    const Report a = run(one);
    const Report b = run(three);
    CHECK(a.instances == b.instances);
    CHECK(a.solves == b.solves);
    CHECK(a.max_node_ratio == b.max_node_ratio);
    CHECK(a.max_depth_seen == b.max_depth_seen);
    for (std::size_t c = 0; c < criterion_count; ++c) {
        CHECK(a.tallies[c].checked == b.tallies[c].checked);
        CHECK(a.tallies[c].failed == b.tallies[c].failed);
        CHECK(a.tallies[c].failures == b.tallies[c].failures);
    }
}

TEST_CASE("named instances") {
    const Tally t = check_named_instances();
    CHECK(t.passed());
    CHECK(t.checked == 11);
}

TEST_CASE("criterion names are distinct") {
    for (std::size_t a = 0; a < criterion_count; ++a) {
        for (std::size_t b = a + 1; b < criterion_count; ++b) {
            CHECK(name(static_cast<Criterion>(a)) != name(static_cast<Criterion>(b)));
        }
    }
}
