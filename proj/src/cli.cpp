#include "vcalp/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcalp/dimacs.hpp"
#include "vcalp/errors.hpp"
#include "vcalp/gallai_edmonds.hpp"
#include "vcalp/matching.hpp"
#include "vcalp/oracle.hpp"
#include "vcalp/solver.hpp"
#include "vcalp/verify.hpp"

namespace vcalp::cli {

namespace {

using nlohmann::json;

// External labels: input vertex i is VertexId{i - 1}; vertices created by
// reductions keep the same rule and get labels above n.
std::uint64_t label(VertexId v) { return std::uint64_t{v.value} + 1; }

json labels(const VertexSet& s) {
    json a = json::array();
    for (VertexId v : s) a.push_back(label(v));
    return a;
}

std::string labels_text(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << label(s[i]);
    os << '}';
    return os.str();
}

json half_json(HalfInt h) { return {{"exact", h.to_string()}, {"value", h.to_double()}}; }

std::size_t default_oracle_cap() {
    if (const char* env = std::getenv("VCALP_ORACLE_CAP")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return oracle::default_lp_cap;
}

// Exact OPT via the solver: the first k_hat >= 0 with a YES answer.
std::pair<std::int64_t, SolveReport> solver_opt(const Graph& g) {
    for (std::int64_t k_hat = 0;; ++k_hat) {
        SolveReport rep = solve_vcalp(g, k_hat);
        if (rep.answer) return {rep.initial.lower_bound + k_hat, std::move(rep)};
    }
}

json report_json(const SolveReport& r, ParamMode mode) {
    json j;
    j["answer"] = r.answer;
    j["mode"] = to_string(mode.kind);
    j["param"] = mode.value;
    j["certificate"] = r.certificate ? labels(*r.certificate) : json(nullptr);
    j["nodes_visited"] = r.nodes_visited;
    j["max_depth"] = r.max_depth;
    j["reductions_applied"] = {{"rule1", r.reductions_applied[0]},
                               {"rule2", r.reductions_applied[1]},
                               {"rule3", r.reductions_applied[2]}};
    j["branches_applied"] = {{"rule1", r.branches_applied[0]}, {"rule2", r.branches_applied[1]}};
    j["initial"] = {{"mm", r.initial.mm},
                    {"lp", half_json(r.initial.lp)},
                    {"lower_bound", r.initial.lower_bound},
                    {"k", r.initial.k},
                    {"k_hat", r.initial.k_hat}};
    return j;
}

int cmd_solve(const std::string& path, const std::string& mode_name, std::int64_t param,
              const std::string& format, std::ostream& out) {
    const Graph g = dimacs::load(path);
    const ParamMode mode{*parse_mode(mode_name), param};
    const SolveReport r = solve_mode(g, mode);
    if (format == "json") {
        out << report_json(r, mode).dump(2) << '\n';
    } else {
        out << "answer: " << (r.answer ? "YES" : "NO") << '\n';
        if (r.certificate) {
            out << "cover (" << r.certificate->size() << "): " << labels_text(*r.certificate) << '\n';
        }
        out << "MM=" << r.initial.mm << " LP=" << r.initial.lp.to_string()
            << " 2LP-MM=" << r.initial.lower_bound << " k=" << r.initial.k
            << " k_hat=" << r.initial.k_hat << '\n';
        out << "nodes=" << r.nodes_visited << " max_depth=" << r.max_depth
            << " reductions=" << r.reductions_applied[0] << '/' << r.reductions_applied[1] << '/'
            << r.reductions_applied[2] << " branches=" << r.branches_applied[0] << '/'
            << r.branches_applied[1] << '\n';
    }
    return r.answer ? exit_ok : exit_no;
}

int cmd_bounds(const std::string& path, std::size_t cap, const std::string& format,
               std::ostream& out, std::ostream& err) {
    const Graph g = dimacs::load(path);
    const auto mm = static_cast<std::int64_t>(matching_number(g));
    const HalfInt lp = lp_value(g);
    const HalfInt bound = lovasz_plummer_bound(g);
    const std::int64_t opt = solver_opt(g).first;
    std::optional<std::int64_t> brute;
    if (g.order() <= cap) brute = static_cast<std::int64_t>(oracle::brute_opt(g, cap).size);

    std::string problem;
    if (!(HalfInt::from_int(mm) <= lp && lp <= bound && bound <= HalfInt::from_int(opt))) {
        problem = "bound chain violated";
    } else if (brute && *brute != opt) {
        problem = "solver OPT " + std::to_string(opt) + " differs from brute force " +
                  std::to_string(*brute);
    }
    if (format == "json") {
        json j{{"n", g.order()}, {"m", g.size()}, {"mm", mm}, {"lp", half_json(lp)},
               {"lower_bound", half_json(bound)}, {"opt", opt},
               {"opt_brute_force", brute ? json(*brute) : json(nullptr)},
               {"chain_ok", problem.empty()}};
        out << j.dump(2) << '\n';
    } else {
        out << "n=" << g.order() << " m=" << g.size() << '\n'
            << "MM=" << mm << '\n'
            << "LP=" << lp.to_string() << '\n'
            << "2LP-MM=" << bound.to_string() << '\n'
            << "OPT=" << opt << (brute ? " (confirmed by brute force)" : "") << '\n';
    }
    if (!problem.empty()) {
        err << "internal error: " << problem << '\n';
        return exit_internal;
    }
    return exit_ok;
}

int cmd_decompose(const std::string& path, const std::string& format, std::ostream& out) {
    const Graph g = dimacs::load(path);
    const GallaiEdmonds d = decompose(g);
    if (format == "json") {
        json comps = json::array();
        for (const auto& c : d.outer_components) comps.push_back(labels(c));
        out << json{{"outer", labels(d.outer)},
                    {"inner", labels(d.inner)},
                    {"perfect", labels(d.perfect)},
                    {"outer_components", comps}}
                   .dump(2)
            << '\n';
    } else {
        out << "O: " << labels_text(d.outer) << '\n'
            << "I: " << labels_text(d.inner) << '\n'
            << "P: " << labels_text(d.perfect) << '\n';
        for (const auto& c : d.outer_components) out << "component: " << labels_text(c) << '\n';
    }
    return exit_ok;
}

json step_json(const ReductionStep& s) {
    json j;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Rule1Step>) {
                j = {{"rule", 1}, {"ones", labels(a.ones)}, {"zeros", labels(a.zeros)}};
            } else if constexpr (std::is_same_v<T, Rule2Step>) {
                j = {{"rule", 2}, {"z", labels(a.z)}, {"nz", labels(a.nz)}};
            } else if constexpr (std::is_same_v<T, Rule3Step>) {
                j = {{"rule", 3}, {"z", labels(a.z)}, {"nz", labels(a.nz)}, {"merged", label(a.merged)}};
            } else {
                j = {{"rule", "branch"}, {"picked", labels(a.picked)}};
            }
        },
        s.action);
    j["k_before"] = s.before.k;
    j["k_after"] = s.after.k;
    j["k_hat_before"] = s.before.k_hat();
    j["k_hat_after"] = s.after.k_hat();
    return j;
}

std::string step_text(const ReductionStep& s) {
    std::ostringstream os;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Rule1Step>) {
                os << "rule 1: take " << labels_text(a.ones) << ", drop " << labels_text(a.zeros);
            } else if constexpr (std::is_same_v<T, Rule2Step>) {
                os << "rule 2: Z=" << labels_text(a.z) << " N(Z)=" << labels_text(a.nz);
            } else if constexpr (std::is_same_v<T, Rule3Step>) {
                os << "rule 3: Z=" << labels_text(a.z) << " N(Z)=" << labels_text(a.nz)
                   << " merged into " << label(a.merged);
            } else {
                os << "branch: take " << labels_text(a.picked);
            }
        },
        s.action);
    os << "  k " << s.before.k << " -> " << s.after.k << ", k_hat " << s.before.k_hat() << " -> "
       << s.after.k_hat();
    return os.str();
}

int cmd_reduce(const std::string& path, std::int64_t k, const std::string& format,
               std::ostream& out) {
    const Graph g = dimacs::load(path);
    const ReductionResult r = reduce_exhaustively(g, Budget::of(g, k));
    if (format == "json") {
        json steps = json::array();
        for (const auto& s : r.trace.steps) steps.push_back(step_json(s));
        json edges = json::array();
        for (const Edge& e : r.graph.edges()) edges.push_back({label(e.u), label(e.v)});
        json verts = json::array();
        for (VertexId v : r.graph.vertices()) verts.push_back(label(v));
        out << json{{"steps", steps},
                    {"vertices", verts},
                    {"edges", edges},
                    {"k", r.budget.k},
                    {"k_hat", r.budget.k_hat()}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& s : r.trace.steps) out << step_text(s) << '\n';
        out << "reduced: n=" << r.graph.order() << " m=" << r.graph.size() << " k=" << r.budget.k
            << " k_hat=" << r.budget.k_hat() << '\n';
        for (const Edge& e : r.graph.edges()) out << "e " << label(e.u) << ' ' << label(e.v) << '\n';
    }
    return exit_ok;
}

int cmd_gen(std::size_t n, double p, std::uint64_t seed, const std::string& target,
            std::ostream& out) {
    const Graph g = oracle::random_graph(n, p, seed);
    if (target.empty() || target == "-") {
        dimacs::write(out, g);
    } else {
        dimacs::save(target, g);
    }
    return exit_ok;
}

int cmd_verify(const verify::Config& cfg, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const verify::Report r = verify::run(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "instances=" << r.instances << " solves=" << r.solves << " seconds=" << secs << '\n';
    for (std::size_t c = 0; c < verify::criterion_count; ++c) {
        const auto crit = static_cast<verify::Criterion>(c);
        const verify::Tally& t = r[crit];
        out << (t.passed() ? "PASS " : "FAIL ") << verify::name(crit) << " (" << t.checked
            << " checks, " << t.failed << " failed)\n";
        for (const auto& [index, msg] : t.failures) out << "  #" << index << ' ' << msg << '\n';
    }
    out << "max nodes/3^k_hat=" << r.max_node_ratio << " max depth=" << r.max_depth_seen << '\n';
    return r.passed() ? exit_ok : exit_no;
}

int cmd_oracle(const std::string& path, std::size_t cap, std::ostream& out) {
    const Graph g = dimacs::load(path);
    auto attempt = [&](const char* what, auto&& fn) {
        out << what << ": ";
        try {
            fn();
        } catch (const OracleRefusal& e) {
            out << "refused (" << e.what() << ')';
        }
        out << '\n';
    };
    attempt("OPT", [&] {
        const auto r = oracle::brute_opt(g, cap);
        out << r.size << ' ' << labels_text(r.cover);
    });
    attempt("alpha", [&] { out << oracle::brute_independence_number(g, cap); });
    attempt("MM", [&] { out << oracle::brute_matching_number(g, cap); });
    attempt("LP", [&] { out << oracle::brute_lp(g, cap).to_string(); });
    attempt("surplus", [&] {
        const auto w = oracle::brute_surplus(g, cap);
        if (w) {
            out << w->surplus << " Z=" << labels_text(w->z);
        } else {
            out << "none (empty graph)";
        }
    });
    attempt("Gallai-Edmonds", [&] {
        const auto d = oracle::brute_gallai_edmonds(g, cap);
        out << "O=" << labels_text(d.outer) << " I=" << labels_text(d.inner)
            << " P=" << labels_text(d.perfect);
    });
    return exit_ok;
}

int cmd_bench(std::size_t n, double p, std::size_t samples, std::uint64_t seed, std::ostream& out) {
    out << "seed n m MM LP 2LP-MM OPT k_hat nodes depth ms\n";
    for (std::size_t i = 0; i < samples; ++i) {
        const Graph g = oracle::random_graph(n, p, seed + i);
        const auto start = std::chrono::steady_clock::now();
        const auto [opt, rep] = solver_opt(g);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out << seed + i << ' ' << g.order() << ' ' << g.size() << ' ' << rep.initial.mm << ' '
            << rep.initial.lp.to_string() << ' ' << rep.initial.lower_bound << ' ' << opt << ' '
            << rep.initial.k_hat << ' ' << rep.nodes_visited << ' ' << rep.max_depth << ' ' << ms
            << '\n';
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact vertex cover above the 2LP - MM lower bound", "vcalp"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    const auto formats = CLI::IsMember({"text", "json"});

    auto* solve = app.add_subcommand("solve", "Decide OPT <= budget for a DIMACS graph");
    std::string mode = "vcalp";
    std::int64_t param = 0;
    solve->add_option("graph", path, "DIMACS edge file")->required();
    solve->add_option("--mode", mode, "Parameter: vc, agvc, vcal or vcalp")
        ->check(CLI::IsMember({"vc", "agvc", "vcal", "vcalp"}))
        ->capture_default_str();
    solve->add_option("--param", param, "Parameter value")->capture_default_str();
    solve->add_option("--format", format)->check(formats)->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "Print MM, LP, 2LP - MM and OPT");
    std::size_t cap = default_oracle_cap();
    bounds->add_option("graph", path, "DIMACS edge file")->required();
    bounds->add_option("--cap", cap, "Largest n checked against the brute-force oracle")
        ->capture_default_str();
    bounds->add_option("--format", format)->check(formats)->capture_default_str();

    auto* decomp = app.add_subcommand("decompose", "Gallai-Edmonds decomposition");
    decomp->add_option("graph", path, "DIMACS edge file")->required();
    decomp->add_option("--format", format)->check(formats)->capture_default_str();

    auto* reduce = app.add_subcommand("reduce", "Apply the reduction rules exhaustively");
    std::int64_t k = 0;
    reduce->add_option("graph", path, "DIMACS edge file")->required();
    reduce->add_option("--k", k, "Vertex cover budget")->required();
    reduce->add_option("--format", format)->check(formats)->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Write a seeded G(n, p) graph in DIMACS format");
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::string target;
    gen->add_option("n", n, "Number of vertices")->required();
    gen->add_option("p", p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("out", target, "Output file (stdout if omitted)");
    gen->add_option("--seed", seed)->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Check the solver against the brute-force oracles");
    verify::Config vcfg;
    std::size_t n_max = vcfg.class_max_n;
    ver->add_option("--n-max", n_max, "Every graph up to this many vertices (at most 7)")
        ->check(CLI::Range(0, 7))
        ->capture_default_str();
    ver->add_option("--labeled-max-n", vcfg.labeled_max_n,
                    "Above this size only one graph per isomorphism class")
        ->check(CLI::Range(0, 7))
        ->capture_default_str();
    ver->add_option("--samples", vcfg.random_samples, "Random graphs")->capture_default_str();
    ver->add_option("--seed", vcfg.seed)->capture_default_str();
    ver->add_option("--jobs", vcfg.jobs)->check(CLI::Range(1u, 256u))->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "Brute-force values for a small graph");
    orc->add_option("graph", path, "DIMACS edge file")->required();
    orc->add_option("--cap", cap, "Largest n the oracles accept")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time the solver on seeded random graphs");
    std::size_t bench_n = 40;
    double bench_p = 0.1;
    std::size_t bench_samples = 5;
    bench->add_option("--n", bench_n)->capture_default_str();
    bench->add_option("--p", bench_p)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    bench->add_option("--samples", bench_samples)->capture_default_str();
    bench->add_option("--seed", seed)->capture_default_str();

    std::vector<const char*> argv{"vcalp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve) return cmd_solve(path, mode, param, format, out);
        if (*bounds) return cmd_bounds(path, cap, format, out, err);
        if (*decomp) return cmd_decompose(path, format, out);
        if (*reduce) return cmd_reduce(path, k, format, out);
        if (*gen) return cmd_gen(n, p, seed, target, out);
        if (*ver) {
            vcfg.class_max_n = n_max;
            vcfg.labeled_max_n = std::min(vcfg.labeled_max_n, n_max);
            return cmd_verify(vcfg, out);
        }
        if (*orc) return cmd_oracle(path, cap, out);
        if (*bench) return cmd_bench(bench_n, bench_p, bench_samples, seed, out);
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace vcalp::cli
