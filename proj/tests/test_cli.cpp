#include <doctest.h>

#include <sstream>

#include "dlcoh/cli.hpp"
#include "dlcoh/json_io.hpp"

using namespace dlcoh;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cohomology table output") {
    auto r = run({"cohomology", "--n", "5", "--d", "4", "--format", "table"});
    CHECK(r.code == 0);
    for (const char* row : {"      5          0  [1,1,1,1,1]", "      6          2  [2,2,1]", "      7          3  [3,2]",
                            "     10          5  [5]"})
        CHECK(r.out.find(row) != std::string::npos);
    auto p = run({"cohomology", "--n", "1", "--d", "1", "--format", "json"});
    CHECK(p.code == 0);
    auto j = Json::parse(p.out);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["degree"] == 0);
}

TEST_CASE("table and json agree") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cohomology", "--n", "5", "--d", "4"},
             {"cohomology", "--n", "6", "--d", "3", "--mu", "2+1"},
             {"cohomology", "--n", "5", "--d", "4", "--mod-m", "5"},
             {"cohomology", "--n", "7", "--d", "5", "--normalization", "C"}}) {
        auto t = run(args);
        auto jargs = args;
        jargs.insert(jargs.end(), {"--format", "json"});
        auto j = run(jargs);
        CHECK(t.code == j.code);
        auto parsed = table_from_json(Json::parse(j.out));
        for (const auto& [k, v] : parsed.table.entries()) {
            CHECK(t.out.find(std::to_string(k.first)) != std::string::npos);
            CHECK(t.out.find(v.to_string()) != std::string::npos);
        }
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"cohomology", "--n", "5"}).code == 2);
    CHECK(run({"cohomology", "--n", "5", "--d", "4", "--frobnicate"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"cohomology", "--n", "3", "--d", "4"}).code == 2);
    CHECK(run({"brauer", "--m", "3", "--p", "4"}).code == 2);
    // refused gate
    auto g = run({"cohomology", "--n", "5", "--d", "2", "--mod-m", "3"});
    CHECK(g.code == 1);
    CHECK(g.err.find("precondition") != std::string::npos);
    // override is accepted and flagged
    auto o = run({"cohomology", "--n", "4", "--d", "3", "--mod-m", "4", "--assume-torsion-free"});
    CHECK(o.code == 0);
    CHECK(o.out.find("unverified") != std::string::npos);
    // a failing cross-check is an inconsistency report
    CHECK(run({"cohomology", "--n", "4", "--d", "1"}).code == 1);
    CHECK(run({"--seed", "17", "invariants", "--n", "5", "--d", "4"}).code == 0);
}

TEST_CASE("tilting and dl-complex") {
    auto t = run({"tilting", "--m", "5", "--r", "1", "--j", "5"});
    CHECK(t.code == 0);
    CHECK(t.out.find("partial-tilting: true") != std::string::npos);
    auto tj = run({"tilting", "--m", "4", "--r", "2", "--j", "3", "--p", "3", "--format", "json"});
    CHECK(tj.code == 0);
    CHECK(Json::parse(tj.out)["partial_tilting"] == true);
    auto d = run({"dl-complex", "--n", "5", "--d", "4", "--mod-m", "5", "--r", "1"});
    CHECK(d.code == 0);
    CHECK(d.out.find("partial-tilting") != std::string::npos);
    CHECK(run({"dl-complex", "--n", "6", "--d", "2", "--mod-m", "3", "--r", "1"}).code == 1);
}

TEST_CASE("other subcommands") {
    auto b = run({"brauer", "--m", "5", "--r", "2", "--labels", "5"});
    CHECK(b.code == 0);
    CHECK(b.out.find("S_5 <-> (1,1,1,1,1)") != std::string::npos);
    auto bj = run({"brauer", "--m", "3", "--r", "1", "--format", "json"});
    CHECK(Json::parse(bj.out)["hom_dims"][0][1] == 1);
    auto k = run({"blocks", "--n", "5", "--d", "4"});
    CHECK(k.code == 0);
    CHECK(k.out.find("core (1):") != std::string::npos);
    CHECK(run({"check-les", "--max-n", "6"}).code == 1);
    auto v = run({"verify-all", "--only", "1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("criterion 1: PASS") != std::string::npos);
}
