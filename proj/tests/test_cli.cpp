#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "ricci/run.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ricci::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("profile in csv lists every edge with exact fractions") {
    auto r = invoke({"curvature", "--generate", "petersen", "--all", "--format", "csv"});
    REQUIRE(r.code == 0);
    auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 16);
    CHECK(lines[0] == "u,v,kappa_num,kappa_den,method,matching_size,gap_zero");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CAPTURE(lines[i]);
        CHECK(lines[i].find(",0,1,both,0,true") != std::string::npos);
    }
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> args{"curvature", "--generate", "paley:13", "--all",
                                  "--format", "csv"};
    auto a = invoke(args);
    auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> vr{"verify", "--random", "4", "--seed", "11", "--max-n", "9"};
    auto va = invoke(vr);
    auto vb = invoke(vr);
    CHECK(va.code == 0);
    CHECK(va.out == vb.out);
}

TEST_CASE("csv and json report the same numbers in the same order") {
    auto csv = invoke({"curvature", "--generate", "rooks:4", "--all", "--format", "csv"});
    auto js = invoke({"curvature", "--generate", "rooks:4", "--all"});
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    auto lines = csv_lines(csv.out);
    json doc = json::parse(js.out);
    REQUIRE(doc["reports"].size() == lines.size() - 1);
    for (std::size_t i = 0; i < doc["reports"].size(); ++i) {
        const auto& rep = doc["reports"][i];
        std::ostringstream expect;
        expect << rep["u"].get<int>() << "," << rep["v"].get<int>() << ","
               << rep["condensed"]["num"].get<long long>() << ","
               << rep["condensed"]["den"].get<long long>();
        CHECK(lines[i + 1].rfind(expect.str(), 0) == 0);
    }
}

TEST_CASE("single edge report in json") {
    auto r = invoke({"curvature", "--generate", "complete:4", "--edge", "0,1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["report"]["condensed"]["num"] == 4);
    CHECK(doc["report"]["condensed"]["den"] == 3);
    CHECK(doc["report"]["method"] == "both");
    CHECK(doc["report"]["certificate"]["gap_zero"] == true);
}

TEST_CASE("certified report carries replayable witness data") {
    auto r = invoke({"curvature", "--generate", "shrikhande", "--edge", "0,1", "--certify"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["report"]["method"] == "both");
    CHECK(doc.contains("replay"));
    CHECK(doc["replay"].contains("matched_pairs"));
    CHECK(doc["replay"].contains("two_step_pairs"));
    CHECK(doc["replay"].contains("plan"));
    CHECK(doc["replay"].contains("potential"));
    CHECK(doc["replay"]["matched_pairs"].size() == 1);
}

TEST_CASE("scaled evaluation reports the slope and a halving probe") {
    auto r = invoke({"curvature", "--generate", "petersen", "--edge", "0,7", "--eps", "1/4"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    const auto& rep = doc["reports"][0];
    CHECK(rep["method"] == "scaled");
    CHECK(rep["eps"]["num"] == 1);
    CHECK(rep["eps"]["den"] == 4);
    CHECK(rep["kappa_eps"]["num"] == 0);
    CHECK(rep["scaled_slope"]["num"] == 0);
    CHECK(rep["linear_at_half_eps"] == true);
}

TEST_CASE("verify reports completeness rigidity") {
    auto r = invoke({"verify", "--generate", "complete:6"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["rigidity"]["is_complete"] == true);
    CHECK(doc["rigidity"]["min_edge_curvature"]["num"] == 6);
    CHECK(doc["rigidity"]["min_edge_curvature"]["den"] == 5);
    CHECK(doc["rigidity"]["consistent"] == true);

    auto random = invoke({"verify", "--random", "6", "--seed", "3", "--max-n", "10"});
    REQUIRE(random.code == 0);
    json rdoc = json::parse(random.out);
    CHECK(rdoc["graphs"].size() == 6);
    CHECK(rdoc["all_consistent"] == true);
}

TEST_CASE("decompose and matching emit the partition data") {
    auto d = invoke({"decompose", "--generate", "petersen", "--edge", "0,7"});
    REQUIRE(d.code == 0);
    json ddoc = json::parse(d.out);
    CHECK(ddoc["sizes"]["triangle"] == 0);
    CHECK(ddoc["sizes"]["exclusive_x"] == 2);
    CHECK(ddoc["sizes"]["pentagon"] == 4);

    auto m = invoke({"matching", "--generate", "rooks:4", "--edge", "0,1"});
    REQUIRE(m.code == 0);
    json mdoc = json::parse(m.out);
    CHECK(mdoc["matching_size"] == 3);
    CHECK(mdoc["counting_identity"]["holds"] == true);
}

TEST_CASE("spectrum command checks the gap bounds") {
    auto r = invoke({"spectrum", "--generate", "petersen"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["eigenvalues"].size() == 10);
    CHECK(doc["checks"]["upper_bound_ok"] == true);
    CHECK(doc["checks"]["lichnerowicz_ok"] == true);
}

TEST_CASE("scan emits one row per prime") {
    auto r = invoke({"scan", "--paley", "13,17", "--format", "csv"});
    REQUIRE(r.code == 0);
    auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].rfind("13,13,6,2,3,true,true,2,3,2,3,true", 0) == 0);
    CHECK(lines[2].rfind("17,17,8,3,4,true,true,5,8,5,8,true", 0) == 0);
}

TEST_CASE("generate round trips through the graph loader") {
    auto text = invoke({"generate", "--generate", "petersen"});
    REQUIRE(text.code == 0);
    std::string path = "cli_roundtrip_petersen.txt";
    {
        std::ofstream f(path);
        f << text.out;
    }
    auto r = invoke({"curvature", "--graph", path, "--all", "--format", "csv"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    CHECK(csv_lines(r.out).size() == 16);

    auto js = invoke({"generate", "--generate", "cycle:5", "--format", "json"});
    REQUIRE(js.code == 0);
    json doc = json::parse(js.out);
    CHECK(doc["n"] == 5);
    CHECK(doc["edges"].size() == 5);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(invoke({"curvature", "--generate", "petersen"}).code == 2);          // no edge selection
    CHECK(invoke({"curvature", "--generate", "petersen", "--edge", "0,7",
                  "--all"}).code == 2);                                        // both selections
    CHECK(invoke({"curvature", "--generate", "petersen", "--edge", "0,7",
                  "--certify", "--eps", "1/4"}).code == 2);                    // certify with eps
    CHECK(invoke({"curvature", "--generate", "nosuch", "--all"}).code == 2);
    CHECK(invoke({"curvature", "--all"}).code == 2);                           // no graph source
    CHECK(invoke({"curvature", "--graph", "/nonexistent.txt", "--all"}).code == 2);
    CHECK(invoke({"curvature", "--generate", "petersen", "--edge", "0,1",
                  "--eps", "1/4"}).code == 2);                                 // not an edge
    CHECK(invoke({"curvature", "--generate", "petersen", "--edge", "0,7",
                  "--eps", "0"}).code == 2);
    CHECK(invoke({"curvature", "--generate", "petersen", "--edge", "0,7",
                  "--eps", "2"}).code == 2);
    CHECK(invoke({"curvature", "--generate", "petersen", "--edge", "zz"}).code == 2);
    CHECK(invoke({"scan"}).code == 2);                                         // no primes
    CHECK(invoke({"generate", "--generate", "cycle:5", "--format", "csv"}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({}).code == 2);

    auto err = invoke({"curvature", "--generate", "nosuch", "--all"});
    CHECK(err.err.rfind("error:", 0) == 0);
}

TEST_CASE("help exits cleanly") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"curvature", "--help"}).code == 0);
}
