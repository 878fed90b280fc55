#include "vcalp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "vcalp/errors.hpp"
#include "vcalp/gallai_edmonds.hpp"
#include "vcalp/matching.hpp"
#include "vcalp/oracle.hpp"
#include "vcalp/solver.hpp"

namespace vcalp::verify {

std::string name(Criterion c) {
    switch (c) {
        case Criterion::oracle_exhaustive: return "oracle equivalence, small graphs";
        case Criterion::oracle_random: return "oracle equivalence, random graphs";
        case Criterion::bound_chain: return "MM <= LP <= 2LP-MM <= OPT";
        case Criterion::reduction_safety: return "reduction step bounds";
        case Criterion::reduced_surplus: return "surplus >= 2 after reduction";
        case Criterion::measure_drop: return "measure drop and depth";
        case Criterion::node_bound: return "search tree size";
        case Criterion::gallai_edmonds: return "Gallai-Edmonds decomposition";
        case Criterion::certificates: return "certificates";
        case Criterion::named_instances: return "named instances";
    }
    return "unknown";
}

bool Report::passed() const {
    return std::all_of(tallies.begin(), tallies.end(), [](const Tally& t) { return t.passed(); });
}

namespace {

std::uint64_t labeled_count(std::size_t n) {
    return std::uint64_t{1} << (n * (n > 0 ? n - 1 : 0) / 2);
}

void record(Tally& t, bool ok, std::uint64_t index, const std::string& label,
            const std::string& what, std::size_t kept) {
    ++t.checked;
    if (ok) return;
    ++t.failed;
    if (t.failures.size() < kept) t.failures.emplace_back(index, label + ": " + what);
}

std::string set_text(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i].value;
    os << '}';
    return os.str();
}

class CheckingObserver : public SolveObserver {
public:
    CheckingObserver(const Config& cfg, Report& report, std::uint64_t index, std::string label)
        : cfg_(cfg), report_(report), index_(index), label_(std::move(label)) {}

    void on_reduction_step(const ReductionStep& step) override {
        const std::string problem = check_step_bounds(step);
        record(report_[Criterion::reduction_safety], problem.empty(), index_, label_, problem,
               cfg_.failures_kept);
    }

    void on_reduced(const Graph& g, const Budget& b, std::size_t) override {
        if (g.empty() || g.order() > cfg_.surplus_cap) return;
        const auto w = oracle::brute_surplus(g, cfg_.surplus_cap);
        const bool ok = w && w->surplus >= 2;
        record(report_[Criterion::reduced_surplus], ok, index_, label_,
               "reduced graph on " + std::to_string(g.order()) + " vertices (k=" +
                   std::to_string(b.k) + ") has surplus " +
                   (w ? std::to_string(w->surplus) : std::string("none")) +
                   (w ? " at Z=" + set_text(w->z) : std::string()),
               cfg_.failures_kept);
    }

    void on_branch(BranchRule rule, const Budget& parent,
                   std::span<const ChildInstance> children) override {
        for (const auto& child : children) {
            const Budget fresh = Budget::of(child.graph, child.budget.k);
            const bool ok = child.budget.k_hat() <= parent.k_hat() - 1 && fresh == child.budget;
            record(report_[Criterion::measure_drop], ok, index_, label_,
                   "branch rule " + std::to_string(static_cast<int>(rule)) + " child picking " +
                       set_text(child.picked) + " has measure " +
                       std::to_string(child.budget.k_hat()) + " under parent " +
                       std::to_string(parent.k_hat()),
                   cfg_.failures_kept);
        }
    }

private:
    const Config& cfg_;
    Report& report_;
    std::uint64_t index_;
    std::string label_;
};

void check_decomposition(const Config& cfg, const Graph& g, std::uint64_t index,
                         const std::string& label, Report& report) {
    Tally& t = report[Criterion::gallai_edmonds];
    const GallaiEdmonds d = decompose(g);
    const GallaiEdmonds brute = oracle::brute_gallai_edmonds(g, cfg.gallai_edmonds_cap);
    record(t, d == brute, index, label,
           "decompose gives O=" + set_text(d.outer) + ", brute force O=" + set_text(brute.outer),
           cfg.failures_kept);
    for (const auto& comp : d.outer_components) {
        record(t, is_factor_critical(induced_subgraph(g, comp)), index, label,
               "component " + set_text(comp) + " of G[O] is not factor-critical", cfg.failures_kept);
    }
    record(t, has_perfect_matching(induced_subgraph(g, d.perfect)), index, label,
           "G[P] has no perfect matching", cfg.failures_kept);
    const VertexSet expected_inner = set_difference(neighborhood_of_set(g, d.outer), d.outer);
    record(t, expected_inner == d.inner, index, label, "I differs from N(O)", cfg.failures_kept);
}

double power_of_three(std::int64_t e) { return std::pow(3.0, static_cast<double>(e)); }

void merge_into(Report& into, Report&& from, std::size_t kept) {
    for (std::size_t c = 0; c < criterion_count; ++c) {
        Tally& a = into.tallies[c];
        Tally& b = from.tallies[c];
        a.checked += b.checked;
        a.failed += b.failed;
        a.failures.insert(a.failures.end(), std::make_move_iterator(b.failures.begin()),
                          std::make_move_iterator(b.failures.end()));
        std::sort(a.failures.begin(), a.failures.end());
        if (a.failures.size() > kept) a.failures.resize(kept);
    }
    into.instances += from.instances;
    into.solves += from.solves;
    into.max_node_ratio = std::max(into.max_node_ratio, from.max_node_ratio);
    into.max_depth_seen = std::max(into.max_depth_seen, from.max_depth_seen);
}

}  // namespace

Corpus::Corpus(const Config& cfg) : cfg_(cfg) {
    if (cfg.labeled_max_n > 7) throw ContractViolation("labeled corpus limited to 7 vertices");
    if (cfg.random_min_n > cfg.random_max_n) throw ContractViolation("random_min_n > random_max_n");
    if (cfg.densities.empty()) throw ContractViolation("no densities for the random corpus");
    for (std::size_t n = 0; n <= cfg.labeled_max_n; ++n) labeled_count_ += labeled_count(n);
    for (std::size_t n = cfg.labeled_max_n + 1; n <= cfg.class_max_n; ++n) {
        for (std::uint64_t mask : oracle::isomorphism_classes(n)) class_masks_.emplace_back(n, mask);
    }
}

std::uint64_t Corpus::size() const {
    return labeled_count_ + class_masks_.size() + cfg_.random_samples;
}

Instance Corpus::instance(std::uint64_t index) const {
    if (index >= size()) throw ContractViolation("corpus index out of range");
    if (index < labeled_count_) {
        std::size_t n = 0;
        while (index >= labeled_count(n)) index -= labeled_count(n++);
        return {oracle::labeled_graph(n, index),
                "labeled n=" + std::to_string(n) + " mask=" + std::to_string(index), true};
    }
    index -= labeled_count_;
    if (index < class_masks_.size()) {
        const auto [n, mask] = class_masks_[index];
        return {oracle::labeled_graph(n, mask),
                "class n=" + std::to_string(n) + " mask=" + std::to_string(mask), true};
    }
    index -= class_masks_.size();
    const std::size_t sizes = cfg_.random_max_n - cfg_.random_min_n + 1;
    const std::size_t n = cfg_.random_min_n + (index / cfg_.densities.size()) % sizes;
    const double p = cfg_.densities[index % cfg_.densities.size()];
    const std::uint64_t seed = cfg_.seed + index;
    std::ostringstream label;
    label << "random n=" << n << " p=" << p << " seed=" << seed;
    return {oracle::random_graph(n, p, seed), label.str(), false};
}

void check_instance(const Config& cfg, const Instance& inst, std::uint64_t index, Report& report) {
    const Graph& g = inst.graph;
    const std::string& label = inst.label;
    const std::size_t kept = cfg.failures_kept;
    const Criterion oracle_criterion =
        inst.exhaustive ? Criterion::oracle_exhaustive : Criterion::oracle_random;
    ++report.instances;

    const std::size_t opt = oracle::brute_opt(g).size;
    const std::size_t alpha = oracle::brute_independence_number(g);
    record(report[oracle_criterion], opt + alpha == g.order(), index, label,
           "oracles disagree: brute OPT " + std::to_string(opt) + ", n - alpha " +
               std::to_string(g.order() - alpha),
           kept);

    const auto mm = static_cast<std::int64_t>(matching_number(g));
    const HalfInt lp = lp_value(g);
    {
        Tally& t = report[Criterion::bound_chain];
        const auto brute_mm = static_cast<std::int64_t>(oracle::brute_matching_number(g, cfg.oracle_cap));
        const HalfInt brute_lp = oracle::brute_lp(g, cfg.oracle_cap);
        record(t, brute_mm == mm, index, label,
               "MM " + std::to_string(mm) + " but brute force " + std::to_string(brute_mm), kept);
        record(t, brute_lp == lp, index, label,
               "LP " + lp.to_string() + " but brute force " + brute_lp.to_string(), kept);
        const HalfInt bound = lovasz_plummer_bound(g);
        const bool chain = HalfInt::from_int(mm) <= lp && lp <= bound &&
                           bound == HalfInt::from_twice(2 * lp.twice()) - HalfInt::from_int(mm) &&
                           bound <= HalfInt::from_int(static_cast<std::int64_t>(opt));
        record(t, chain, index, label,
               "chain fails: MM=" + std::to_string(mm) + " LP=" + lp.to_string() +
                   " 2LP-MM=" + bound.to_string() + " OPT=" + std::to_string(opt),
               kept);
    }

    if (g.order() <= cfg.gallai_edmonds_cap) check_decomposition(cfg, g, index, label, report);

    for (std::size_t k = 0; k <= g.order(); ++k) {
        const std::string where = label + " k=" + std::to_string(k);
        CheckingObserver observer(cfg, report, index, where);
        SolveOptions opts;
        opts.observer = &observer;
        SolveReport rep;
        ++report.solves;
        try {
            rep = solve_mode(g, ParamMode::plain_vc(static_cast<std::int64_t>(k)), opts);
        } catch (const Error& e) {
            record(report[oracle_criterion], false, index, where,
                   std::string("solver threw: ") + e.what(), kept);
            continue;
        }
        const bool expected = opt <= k;
        record(report[oracle_criterion], rep.answer == expected, index, where,
               std::string("answer ") + (rep.answer ? "YES" : "NO") + " but OPT is " +
                   std::to_string(opt),
               kept);

        bool cert_ok = rep.answer ? rep.certificate && is_vertex_cover(g, *rep.certificate) &&
                                        rep.certificate->size() <= k
                                  : !rep.certificate.has_value();
        record(report[Criterion::certificates], cert_ok, index, where,
               rep.certificate ? "bad certificate " + set_text(*rep.certificate)
                               : std::string("missing certificate"),
               kept);

        const std::int64_t k_hat = rep.initial.k_hat;
        report.max_depth_seen = std::max(report.max_depth_seen, rep.max_depth);
        if (k_hat < 0) {
            record(report[Criterion::node_bound], rep.nodes_visited == 0, index, where,
                   "negative measure but " + std::to_string(rep.nodes_visited) + " nodes", kept);
            continue;
        }
        record(report[Criterion::measure_drop], static_cast<std::int64_t>(rep.max_depth) <= k_hat,
               index, where,
               "depth " + std::to_string(rep.max_depth) + " exceeds measure " + std::to_string(k_hat),
               kept);
        const double nodes = static_cast<double>(rep.nodes_visited);
        const double limit = power_of_three(k_hat + 1) * static_cast<double>(g.order() + 1);
        record(report[Criterion::node_bound], nodes <= limit, index, where,
               std::to_string(rep.nodes_visited) + " nodes exceeds 3^(k_hat+1)(n+1) with k_hat=" +
                   std::to_string(k_hat),
               kept);
        report.max_node_ratio = std::max(report.max_node_ratio, nodes / power_of_three(k_hat));
    }
}

Tally check_named_instances() {
    struct Named {
        std::string label;
        Graph graph;
        std::int64_t bound;
        std::int64_t opt;
        std::vector<std::pair<std::int64_t, bool>> answers;  // (k_hat, expected)
    };
    const std::vector<Named> named{
        {"K5", complete_graph(5), 3, 4, {{0, false}, {1, true}}},
        {"Petersen", petersen_graph(), 5, 6, {{0, false}, {1, true}}},
        {"C5", cycle_graph(5), 3, 3, {{0, true}}},
    };
    Tally t;
    std::uint64_t index = 0;
    for (const auto& item : named) {
        const HalfInt bound = lovasz_plummer_bound(item.graph);
        record(t, bound == HalfInt::from_int(item.bound), index, item.label,
               "2LP-MM is " + bound.to_string(), 100);
        const std::size_t opt = oracle::brute_opt(item.graph).size;
        record(t, static_cast<std::int64_t>(opt) == item.opt, index, item.label,
               "OPT is " + std::to_string(opt), 100);
        for (auto [k_hat, expected] : item.answers) {
            const SolveReport rep = solve_vcalp(item.graph, k_hat);
            const bool ok = rep.answer == expected &&
                            (!expected || (rep.certificate &&
                                           is_vertex_cover(item.graph, *rep.certificate) &&
                                           static_cast<std::int64_t>(rep.certificate->size()) <=
                                               item.bound + k_hat));
            record(t, ok, index, item.label + " k_hat=" + std::to_string(k_hat),
                   std::string("answer ") + (rep.answer ? "YES" : "NO"), 100);
        }
        ++index;
    }
    return t;
}

Report run(const Config& cfg) {
    const Corpus corpus(cfg);
    const std::uint64_t total = corpus.size();
    const unsigned jobs = std::max(1u, cfg.jobs);

    // Contiguous slices, merged in slice order.
    std::vector<Report> partial(jobs);
    auto work = [&](unsigned slot) {
        const std::uint64_t begin = total * slot / jobs;
        const std::uint64_t end = total * (slot + 1) / jobs;
        for (std::uint64_t i = begin; i < end; ++i) {
            check_instance(cfg, corpus.instance(i), i, partial[slot]);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned s = 0; s < jobs; ++s) threads.emplace_back(work, s);
        for (auto& th : threads) th.join();
    }

    Report report;
    for (auto& p : partial) merge_into(report, std::move(p), cfg.failures_kept);
    report[Criterion::named_instances] = check_named_instances();
    return report;
}

}  // namespace vcalp::verify
