#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the command-line binary: exit codes, artifact files,
// and the verify round trip. MCST_CLI_PATH is injected by the build.

namespace {

const std::string cli = MCST_CLI_PATH;
const std::string dir = "cli_scratch";

int run(const std::string& args) {
    std::string cmd = cli + " " + args + " > " + dir + "/last_stdout.json 2>" + dir + "/err.txt";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

nlohmann::json last_output() {
    std::ifstream in(dir + "/last_stdout.json");
    nlohmann::json doc;
    in >> doc;
    return doc;
}

void write_file(const std::string& name, const std::string& body) {
    std::ofstream out(dir + "/" + name);
    out << body;
}

const char* kE1 = R"({
  "nodes": ["v1", "v2", "v3"],
  "edges": [
    {"id": "e12", "u": "v1", "v": "v2", "cost": 1},
    {"id": "e13", "u": "v1", "v": "v3", "cost": 2},
    {"id": "e23", "u": "v2", "v": "v3", "cost": 4}
  ],
  "chain": [{"set": ["v1"], "bound": 1}]
})";

const char* kStar = R"({
  "nodes": ["v1", "v2", "v3", "v4"],
  "edges": [
    {"id": "e12", "u": "v1", "v": "v2", "cost": 1},
    {"id": "e13", "u": "v1", "v": "v3", "cost": 1},
    {"id": "e14", "u": "v1", "v": "v4", "cost": 1}
  ],
  "chain": [{"set": ["v1"], "bound": 1}]
})";

const char* kM1 = R"({
  "matroid": {
    "kind": "graphic",
    "graph": {
      "nodes": ["v1", "v2", "v3"],
      "edges": [
        {"id": "e12", "u": "v1", "v": "v2"},
        {"id": "e13", "u": "v1", "v": "v3"},
        {"id": "e23", "u": "v2", "v": "v3"}
      ]
    }
  },
  "budgets": {
    "d": [[3, 1, 1], [1, 2, 4]],
    "B": [2, 6],
    "objective_index": 2
  }
})";

const char* kToy = R"({
  "variables": ["x1", "x2"],
  "rows": [
    {"tag": "sum", "coeffs": {"x1": 1, "x2": 1}, "sense": "=", "rhs": 1}
  ],
  "A": [[1, 0]],
  "b": ["1/4"],
  "c": [1, 2]
})";

struct Setup {
    Setup() {
        if (std::system(("mkdir -p " + dir).c_str()) != 0) std::abort();
        write_file("e1.json", kE1);
        write_file("star.json", kStar);
        write_file("m1.json", kM1);
        write_file("toy.json", kToy);
    }
};
Setup setup;

}  // namespace

TEST_CASE("pipeline emits a certificate and exit code 0") {
    CHECK(run("pipeline " + dir + "/e1.json --lambda 2 --output " + dir + "/cert.json") == 0);
    std::ifstream in(dir + "/cert.json");
    nlohmann::json cert;
    in >> cert;
    CHECK(cert["cost"] == "3");
    CHECK(cert["crossings"]["S1"] == 2);
}

TEST_CASE("lambda at most 1 is a usage error") {
    CHECK(run("pipeline " + dir + "/e1.json --lambda 1") == 3);
    CHECK(run("pipeline " + dir + "/e1.json --lambda 1/2") == 3);
}

TEST_CASE("infeasible instances exit with 1") {
    CHECK(run("pipeline " + dir + "/star.json --lambda 2") == 1);
    CHECK(last_output()["error"] == "INFEASIBLE_LP");
}

TEST_CASE("verify accepts the emitted certificate and rejects a doctored one") {
    REQUIRE(run("pipeline " + dir + "/e1.json --lambda 2 --output " + dir + "/cert.json") == 0);
    CHECK(run("verify " + dir + "/e1.json --certificate " + dir + "/cert.json") == 0);

    std::ifstream in(dir + "/cert.json");
    nlohmann::json cert;
    in >> cert;
    cert["cost"] = "2";  // claim a better tree than the certificate carries
    std::ofstream out(dir + "/bad_cert.json");
    out << cert.dump();
    out.close();
    CHECK(run("verify " + dir + "/e1.json --certificate " + dir + "/bad_cert.json") == 2);

    // hostile multiplier keys must be reported, not trusted
    std::ifstream in2(dir + "/cert.json");
    nlohmann::json hostile;
    in2 >> hostile;
    hostile["duals"]["y"] = {{"S9", "1"}};
    std::ofstream out2(dir + "/hostile_cert.json");
    out2 << hostile.dump();
    out2.close();
    CHECK(run("verify " + dir + "/e1.json --certificate " + dir + "/hostile_cert.json") == 2);
}

TEST_CASE("solve-lp accepts lambda 1 and reports the exact optimum") {
    CHECK(run("solve-lp " + dir + "/e1.json --lambda 1") == 0);
    auto doc = last_output();
    CHECK(doc["status"] == "optimal");
    CHECK(doc["value"] == "5");
    CHECK(doc["primal"]["e12"] == "1");
}

TEST_CASE("decompose, rainbow and round emit their artifacts") {
    CHECK(run("decompose " + dir + "/e1.json --lambda 2") == 0);
    CHECK(last_output()["family"].size() == 5);
    CHECK(run("rainbow " + dir + "/e1.json --lambda 2") == 0);
    CHECK(last_output()["rainbows_after"].empty());
    CHECK(run("round " + dir + "/e1.json --lambda 2") == 0);
    CHECK(last_output()["tree"].size() == 2);
}

TEST_CASE("matroid-basis solves M1") {
    CHECK(run("matroid-basis " + dir + "/m1.json --epsilon 0.5 --nu 1") == 0);
    auto doc = last_output();
    REQUIRE(doc["feasible"] == true);
    CHECK(doc["basis"] == nlohmann::json::array({"e13", "e23"}));
    CHECK(run("matroid-basis " + dir + "/m1.json --epsilon 0.5 --nu 1 --jobs 2") == 0);
}

TEST_CASE("uniform and partition matroid files parse and solve") {
    write_file("uniform.json", R"({
      "matroid": {"kind": "uniform", "n": 4, "r": 2},
      "budgets": {"d": [[1, 2, 3, 4], [4, 3, 2, 1]], "B": [3, 7], "objective_index": 2}
    })");
    CHECK(run("matroid-basis " + dir + "/uniform.json --epsilon 0.5 --nu 1") == 0);
    CHECK(last_output()["feasible"] == true);

    write_file("partition.json", R"({
      "matroid": {"kind": "partition", "blocks": [["a", "b"], ["c"]], "caps": [1, 1]},
      "budgets": {"d": [[1, 2, 1], [2, 1, 1]], "B": [2, 3], "objective_index": 2}
    })");
    CHECK(run("oracle " + dir + "/partition.json") == 0);
    CHECK(last_output()["bases"] == 2);
    CHECK(run("matroid-basis " + dir + "/partition.json --epsilon 0.5 --nu 1") == 0);
}

TEST_CASE("reduce runs all three modes on the toy problem") {
    CHECK(run("reduce " + dir + "/toy.json --mode lambda --lambda 2 --beta 1") == 0);
    CHECK(last_output()["cost"] == "2");
    CHECK(run("reduce " + dir + "/toy.json --mode two-sided --alpha 2 --beta 2") == 0);
    CHECK(last_output()["cost"] == "1");
    // delta 3/4 makes the relaxed optimum integral, so the rounder can hold it
    CHECK(run("reduce " + dir + "/toy.json --mode additive --delta 3/4") == 0);
    CHECK(last_output()["cost"] == "1");
    // with delta 0 the fractional optimum admits no zero-deviation vertex
    CHECK(run("reduce " + dir + "/toy.json --mode additive --delta 0") == 2);
}

TEST_CASE("oracle reports ground truth for both file kinds") {
    CHECK(run("oracle " + dir + "/e1.json") == 0);
    auto doc = last_output();
    CHECK(doc["spanning_trees"] == 3);
    CHECK(doc["integral_opt"] == "5");
    CHECK(run("oracle " + dir + "/m1.json") == 0);
    CHECK(last_output()["feasible_bases"] == 1);
}

TEST_CASE("gen-random round-trips through the pipeline deterministically") {
    CHECK(run("gen-random --seed 7 --nodes 6 --output " + dir + "/r1.json") == 0);
    CHECK(run("gen-random --seed 7 --nodes 6 --output " + dir + "/r2.json") == 0);
    std::ifstream a(dir + "/r1.json"), b(dir + "/r2.json");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(run("pipeline " + dir + "/r1.json --lambda 2") == 0);
    CHECK(run("gen-random --nodes 30") == 3);
}

TEST_CASE("malformed input is a usage error") {
    write_file("broken.json", "{ not json");
    CHECK(run("pipeline " + dir + "/broken.json --lambda 2") == 3);
    write_file("negative.json", R"({"nodes":["a","b"],"edges":[
        {"id":"e","u":"a","v":"b","cost":"-1"}],"chain":[]})");
    CHECK(run("pipeline " + dir + "/negative.json --lambda 2") == 3);
}
