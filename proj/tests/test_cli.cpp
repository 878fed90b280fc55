#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vcalp/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = vcalp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(VCALP_TEST_DATA) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("solve answers YES and NO with matching exit codes") {
    const Result yes = run({"solve", data("c5.dimacs")});
    CHECK(yes.code == vcalp::cli::exit_ok);
    CHECK(contains(yes.out, "answer: YES"));
    CHECK(contains(yes.out, "2LP-MM=3"));

    const Result no = run({"solve", data("k5.dimacs"), "--param", "0"});
    CHECK(no.code == vcalp::cli::exit_no);
    CHECK(contains(no.out, "answer: NO"));

    CHECK(run({"solve", data("k5.dimacs"), "--mode", "vc", "--param", "4"}).code == 0);
    CHECK(run({"solve", data("k5.dimacs"), "--mode", "agvc", "--param", "1"}).code == 1);
    CHECK(run({"solve", data("k5.dimacs"), "--mode", "vcal", "--param", "1"}).code == 0);
}

TEST_CASE("solve JSON output") {
    const Result r = run({"solve", data("petersen.dimacs"), "--param", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["answer"] == true);
    CHECK(j["mode"] == "vcalp");
    CHECK(j["param"] == 1);
    CHECK(j["certificate"].size() == 6);
    for (const auto& v : j["certificate"]) {
        CHECK(v.get<int>() >= 1);
        CHECK(v.get<int>() <= 10);
    }
    CHECK(j["initial"]["mm"] == 5);
    CHECK(j["initial"]["lp"]["exact"] == "5");
    CHECK(j["initial"]["lower_bound"] == 5);
    CHECK(j["initial"]["k"] == 6);
    CHECK(j["initial"]["k_hat"] == 1);
    CHECK(j.contains("nodes_visited"));
    CHECK(j.contains("max_depth"));
    CHECK(j["reductions_applied"].contains("rule3"));
    CHECK(j["branches_applied"].contains("rule2"));

    const json no = json::parse(run({"solve", data("k5.dimacs"), "--format", "json"}).out);
    CHECK(no["answer"] == false);
    CHECK(no["certificate"].is_null());
}

TEST_CASE("bounds") {
    const Result r = run({"bounds", data("c5.dimacs"), "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["mm"] == 2);
    CHECK(j["lp"]["exact"] == "5/2");
    CHECK(j["lp"]["value"] == 2.5);
    CHECK(j["lower_bound"]["exact"] == "3");
    CHECK(j["opt"] == 3);
    CHECK(j["opt_brute_force"] == 3);
    CHECK(j["chain_ok"] == true);

    const Result pet = run({"bounds", data("petersen.dimacs")});
    CHECK(contains(pet.out, "MM=5\nLP=5\n2LP-MM=5\nOPT=6"));
    const Result k5 = run({"bounds", data("k5.dimacs")});
    CHECK(contains(k5.out, "MM=2\nLP=5/2\n2LP-MM=3\nOPT=4"));
}

TEST_CASE("the oracle cap comes from the environment unless given") {
    ::setenv("VCALP_ORACLE_CAP", "3", 1);
    const json capped = json::parse(run({"bounds", data("c5.dimacs"), "--format", "json"}).out);
    CHECK(capped["opt_brute_force"].is_null());
    const json given = json::parse(run({"bounds", data("c5.dimacs"), "--cap", "5", "--format", "json"}).out);
    CHECK(given["opt_brute_force"] == 3);
    const Result orc = run({"oracle", data("c5.dimacs")});
    CHECK(contains(orc.out, "OPT: refused"));
    ::unsetenv("VCALP_ORACLE_CAP");
}

TEST_CASE("decompose") {
    const json j = json::parse(run({"decompose", data("c5.dimacs"), "--format", "json"}).out);
    CHECK(j["outer"] == json({1, 2, 3, 4, 5}));
    CHECK(j["inner"].empty());
    CHECK(j["perfect"].empty());
    CHECK(j["outer_components"].size() == 1);
    const Result path = run({"decompose", data("path3.dimacs")});
    CHECK(contains(path.out, "O: {1 3}\nI: {2}\nP: {}"));
    const Result pet = run({"decompose", data("petersen.dimacs")});
    CHECK(contains(pet.out, "O: {}\nI: {}\nP: {1 2 3 4 5 6 7 8 9 10}"));
}

TEST_CASE("reduce prints the rule trace") {
    const Result r = run({"reduce", data("c5.dimacs"), "--k", "3"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "rule 3: Z={1} N(Z)={2 5} merged into 6  k 3 -> 2"));
    CHECK(contains(r.out, "rule 2: Z={3} N(Z)={4 6}  k 2 -> 0"));
    CHECK(contains(r.out, "reduced: n=0 m=0 k=0 k_hat=0"));
    const json j = json::parse(run({"reduce", data("c5.dimacs"), "--k", "3", "--format", "json"}).out);
    CHECK(j["steps"].size() == 2);
    CHECK(j["steps"][0]["rule"] == 3);
    CHECK(j["steps"][0]["merged"] == 6);
    CHECK(j["k"] == 0);
    CHECK(run({"reduce", data("c5.dimacs")}).code == vcalp::cli::exit_usage);
}

TEST_CASE("gen is byte-for-byte reproducible") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "vcalp_gen_a.dimacs";
    const auto b = dir / "vcalp_gen_b.dimacs";
    CHECK(run({"gen", "10", "0.4", a.string(), "--seed", "7"}).code == 0);
    CHECK(run({"gen", "10", "0.4", b.string(), "--seed", "7"}).code == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.rfind("p edge 10 19\n", 0) == 0);
    CHECK(run({"gen", "10", "0.4", "--seed", "7"}).out == text);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    CHECK(run({"gen", "10", "1.5"}).code == vcalp::cli::exit_usage);
}

TEST_CASE("verify prints one line per criterion") {
    const Result r = run({"verify", "--n-max", "4", "--samples", "6", "--seed", "3", "--jobs", "2"});
    CHECK(r.code == 0);
    std::size_t pass_lines = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("PASS ", 0) == 0) ++pass_lines;
        CHECK(line.rfind("FAIL ", 0) != 0);
    }
    CHECK(pass_lines == 10);
    CHECK(run({"verify", "--n-max", "9"}).code == vcalp::cli::exit_usage);
}

TEST_CASE("oracle subcommand") {
    const Result r = run({"oracle", data("c5.dimacs")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "OPT: 3"));
    CHECK(contains(r.out, "LP: 5/2"));
    CHECK(contains(r.out, "surplus: 1"));
}

TEST_CASE("bench prints a row per sample") {
    const Result r = run({"bench", "--n", "12", "--p", "0.3", "--samples", "3", "--seed", "5"});
    CHECK(r.code == 0);
    std::size_t rows = 0;
    for (char c : r.out) rows += c == '\n';
    CHECK(rows == 4);
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).code == vcalp::cli::exit_usage);
    CHECK(run({"frobnicate"}).code == vcalp::cli::exit_usage);
    CHECK(run({"solve", data("c5.dimacs"), "--mode", "cover"}).code == vcalp::cli::exit_usage);
    const Result missing = run({"solve", data("missing.dimacs")});
    CHECK(missing.code == vcalp::cli::exit_usage);
    CHECK(contains(missing.err, "cannot open"));
    const Result bad = run({"solve", data("bad_endpoint.dimacs")});
    CHECK(bad.code == vcalp::cli::exit_usage);
    CHECK(contains(bad.err, "line 2"));
    const Result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "solve"));
}
