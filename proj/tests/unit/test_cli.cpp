#include "pql/cli.hpp"
#include "pql/io.hpp"
#include "pql/validate.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using pql::json;

namespace {

const fs::path golden_dir = PQL_GOLDEN_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run pql_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = pql::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return (golden_dir / name).string(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "pql_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("validate") {
    auto ok = pql_run({"validate", "--layout", golden("crossing_one_page.layout.json"), "--graph",
                       golden("crossing.graph.json")});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out) == json{{"valid", true}});

    auto bad = pql_run({"validate", "--layout", golden("crossing_reversed.layout.json"), "--graph",
                        golden("crossing.graph.json")});
    CHECK(bad.code == 1);
    auto j = json::parse(bad.out);
    CHECK(j["valid"] == false);
    REQUIRE(j["violations"].size() == 1);
    auto v = j["violations"][0];
    CHECK(v["kind"] == "crossing");
    CHECK(v["e"] == "1-3");
    CHECK(v["e_prime"] == "0-2");
    CHECK(v["vertex"] == 1);

    auto embedded = pql_run({"validate", "--layout", golden("crossing_two_pages.layout.json")});
    CHECK(embedded.code == 0);
}

TEST_CASE("solve") {
    auto fixed = pql_run({"solve", "--graph", golden("k33.graph.json"), "--mode", "fixed", "--order",
                          golden("separated.order.json")});
    CHECK(fixed.code == 0);
    auto j = json::parse(fixed.out);
    CHECK(j["status"] == "optimal");
    CHECK(j["k"] == 3);
    CHECK(j["lower_bound"] == 3);
    auto g = pql::parse_graph(slurp(golden_dir / "k33.graph.json"));
    auto l = pql::layout_from_json(j["witness"], &g);
    CHECK(pql::is_valid(l));
    CHECK(fixed.out == slurp(golden_dir / "k33_fixed.json"));

    auto sep = pql_run({"solve", "--graph", golden("k33.graph.json"), "--mode", "separated", "--left", "0,1,2"});
    CHECK(sep.code == 0);
    CHECK(json::parse(sep.out)["k"] == 3);

    auto free = pql_run({"solve", "--graph", golden("crossing.graph.json"), "--mode", "free"});
    CHECK(free.code == 0);
    CHECK(json::parse(free.out)["k"] == 1);

    auto starved = pql_run({"solve", "--graph", golden("k33.graph.json"), "--mode", "free", "--budget", "1"});
    CHECK(starved.code == 1);
    auto sj = json::parse(starved.out);
    CHECK(sj["status"] == "budget-exceeded");
    CHECK(sj["k"] == 3);
}

TEST_CASE("recognize and construct") {
    auto r = pql_run({"recognize", "--graph", golden("crossing.graph.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["pqn1"] == true);

    auto k33 = pql_run({"recognize", "--graph", golden("k33.graph.json")});
    CHECK(k33.code == 0);
    auto j = json::parse(k33.out);
    CHECK(j["pqn1"] == false);
    CHECK(j.contains("minor"));

    auto c = pql_run({"construct", "--graph", golden("crossing.graph.json")});
    CHECK(c.code == 0);
    auto cj = json::parse(c.out);
    CHECK(cj["valid"] == true);
    CHECK(cj["k"] == 1);

    auto fail = pql_run({"construct", "--graph", golden("k33.graph.json")});
    CHECK(fail.code == 1);
}

TEST_CASE("render is deterministic") {
    auto a = pql_run({"render", "--layout", golden("crossing_two_pages.layout.json")});
    auto b = pql_run({"render", "--layout", golden("crossing_two_pages.layout.json")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(golden_dir / "crossing_two_pages.svg"));

    auto dot = pql_run({"render", "--layout", golden("crossing_two_pages.layout.json"), "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph", 0) == 0);

    auto path = scratch("render.svg");
    auto filed = pql_run({"render", "--layout", golden("crossing_two_pages.layout.json"), "--out", path.string()});
    CHECK(filed.code == 0);
    CHECK(slurp(path) == a.out);
}

TEST_CASE("gen writes a recipe sidecar") {
    auto out = scratch("minor3.json");
    fs::remove(out.string() + ".recipe.json");
    auto r = pql_run({"gen", "minor", "--index", "3", "--out", out.string()});
    CHECK(r.code == 0);
    auto g = pql::parse_graph(slurp(out));
    CHECK(g.m() > 0);
    auto recipe = json::parse(slurp(out.string() + ".recipe.json"));
    CHECK(recipe["family"] == "minor");

    auto s1 = pql_run({"gen", "interval", "--count", "8", "--seed", "5"});
    auto s2 = pql_run({"gen", "interval", "--count", "8", "--seed", "5"});
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
}

TEST_CASE("exit codes") {
    CHECK(pql_run({}).code == 2);
    CHECK(pql_run({"bogus"}).code == 2);
    CHECK(pql_run({"validate"}).code == 2);
    CHECK(pql_run({"solve", "--graph", golden("k33.graph.json"), "--mode", "sideways"}).code == 2);

    auto garbage = scratch("garbage.json");
    std::ofstream(garbage) << "{ not json";
    CHECK(pql_run({"recognize", "--graph", garbage.string()}).code == 2);

    auto bad_edge = scratch("bad_edge.json");
    std::ofstream(bad_edge) << R"({"n": 2, "edges": [[0, 5, 1]]})";
    CHECK(pql_run({"recognize", "--graph", bad_edge.string()}).code == 2);

    CHECK(pql_run({"gen", "minor", "--index", "12"}).code == 2);
    CHECK(pql_run({"--help"}).code == 0);
}
