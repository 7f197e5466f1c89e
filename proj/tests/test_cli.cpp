#include "momentum/error.hpp"
#include "momentum/task.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace momentum;
namespace fs = std::filesystem;

namespace {

Json parse(const char* s) { return Json::parse(s); }

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("momentum_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_binary(const fs::path& task, const std::string& extra) {
    std::string cmd = std::string(ANALYZE_BIN) + " --task " + task.string() + " " + extra + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("c0 on D2(-1) is 0") {
    TaskResult r = run_task(parse(R"({"task":"c0","data":{"kind":"family","family":"D2","beta":"-1"}})"));
    CHECK(r.report["c0"] == "0");
    CHECK(r.report["status"] == "ok");
    CHECK(r.summary.find("c0=0") != std::string::npos);
}

TEST_CASE("einstein on D1(2) at c = 0") {
    TaskResult r = run_task(parse(R"({"task":"einstein","data":{"kind":"family","family":"D1","k":"2"},"parameters":{"c":"0"}})"));
    CHECK(r.report["einstein"]["einstein"] == true);
    CHECK(r.report["einstein"]["lambda"] == "0");
    CHECK(r.report["identity_holds"] == true);
    TaskResult s = run_task(parse(R"({"task":"einstein","data":{"kind":"family","family":"D1","k":"1"},"parameters":{"c":"0"}})"));
    CHECK(s.report["einstein"]["einstein"] == false);
    CHECK(s.report["einstein"]["lambda"].is_null());
}

TEST_CASE("table2 task") {
    TaskResult r = run_task(parse(R"({"task":"table2"})"));
    REQUIRE(r.tables.size() == 1);
    CHECK(r.tables[0].first == "table2.csv");
    const std::string& csv = r.tables[0].second;
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(r.report["rows"].size() == 6);
    CHECK(r.report["rows"][5]["domain"] == "Annulus");
    CHECK(r.report["tables"][0] == "tables/table2.csv");
}

TEST_CASE("unknown fields are rejected at every level") {
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"kind":"point"},"extra":1})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"kind":"point","colour":1}})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"blocks":[{"beta":"-1","ricci_trace":"0","x":2}]}})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"kind":"point"},"parameters":{"speed":1}})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"interval":{"lower":"0","middle":"1"}}})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"fly"})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0"})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"blocks":[{"beta":"1/0","ricci_trace":"0"}]}})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"c0","data":{"blocks":[{"beta":"1","ricci_trace":"0"}]}})")), InvalidInput);
    CHECK_THROWS_AS(run_task(parse(R"({"task":"profile","data":{"kind":"point"}})")), InvalidInput);
}

TEST_CASE("schema round trip") {
    const char* docs[] = {
        R"({"blocks":[{"beta":"-1/2","multiplicity":1,"ricci_trace":"1"}],"interval":{"lower":"0","upper":"inf","closed_lower":true}})",
        R"({"kind":"family","family":"D3","beta":"-2","lambda":"3/4"})",
        R"({"blocks":[{"beta":"-0.25","multiplicity":2,"ricci_trace":"3"},{"beta":"0","ricci_trace":"-1"}]})",
        R"({"kind":"vector_bundle","rank":3,"blocks":[{"beta":"-1/3","multiplicity":2,"ricci_trace":"1","horizontal":true}]})",
        R"({"kind":"stable_curve","genus":3,"rank":2,"degree":"-1","sigma_d":"2"})",
    };
    NumericMode m;
    for (const char* s : docs) {
        Json once = std::visit([](const auto& d) { return to_json(d); }, data_from_json(Json::parse(s), m));
        Json twice = std::visit([](const auto& d) { return to_json(d); }, data_from_json(once, m));
        CHECK(once == twice);
    }
    Json j = std::visit([](const auto& d) { return to_json(d); }, data_from_json(Json::parse(docs[2]), m));
    CHECK(j["blocks"][0]["beta"] == "-1/4");
}

TEST_CASE("determinism of reports") {
    const char* tasks[] = {
        R"({"task":"analyze","data":{"blocks":[{"beta":"-1","multiplicity":2,"ricci_trace":"-3"}]},"parameters":{"c":"-1"}})",
        R"({"task":"sweep","data":{"kind":"family","family":"D1","k":"1"},"sweep":{"parameter":"c","from":"-1","to":"1","step":"1/10"}})",
        R"({"task":"extremal","data":{"blocks":[{"beta":"1/2","ricci_trace":"3"}],"interval":{"lower":"-1","upper":"1"}},"parameters":{"b":"1","b_range":["1/10","19/10"]}})",
        R"({"task":"profile","data":{"kind":"vector_bundle","rank":2,"blocks":[{"beta":"-1/2","ricci_trace":"1"}]},"parameters":{"c":"-1"}})",
    };
    for (const char* t : tasks) {
        TaskResult a = run_task(Json::parse(t)), b = run_task(Json::parse(t));
        CHECK(a.report.dump(2) == b.report.dump(2));
        CHECK(a.tables == b.tables);
    }
}

TEST_CASE("sweep over c on D1(1): positivity flips at 0") {
    TaskResult r = run_task(parse(
        R"({"task":"sweep","data":{"kind":"family","family":"D1","k":"1"},"sweep":{"parameter":"c","from":"-2","to":"1/2","step":"1/20"}})"));
    const Json& rows = r.report["rows"];
    REQUIRE(rows.size() == 51);
    for (const auto& row : rows) {
        Scalar c = Scalar::parse(row["c"].get<std::string>());
        CHECK(row["positive_on_half_line"] == (c.sign() <= 0));
    }
    // the CSV keeps input order
    std::istringstream csv(r.tables[0].second);
    std::string line;
    std::getline(csv, line);
    CHECK(line == "c,valid,positive_on_half_line,first_zero,habitat");
    std::getline(csv, line);
    CHECK(line.rfind("-2,", 0) == 0);
}

TEST_CASE("sweep over b on symmetric data: futaki vanishes") {
    TaskResult r = run_task(parse(
        R"({"task":"sweep","data":{"blocks":[{"beta":"1/3","multiplicity":2,"ricci_trace":"1"},{"beta":"-1/3","multiplicity":2,"ricci_trace":"1"}],"interval":{"lower":"-2","upper":"2"}},"sweep":{"parameter":"b","from":"1/10","to":"2","step":"1/10"}})"));
    REQUIRE(r.report["rows"].size() == 20);
    for (const auto& row : r.report["rows"]) {
        CHECK(row["futaki"] == "0");
        CHECK(row["sigma1"] == "0");
    }
}

TEST_CASE("sweep over the collapse parameter: c0(a) bounded below") {
    TaskResult r = run_task(parse(
        R"({"task":"sweep","data":{"kind":"stable_curve","genus":2,"rank":2,"degree":"-1","sigma_d":"1"},"sweep":{"parameter":"a","from":"1/200","to":"1","step":"1/200"}})"));
    const Json& rows = r.report["rows"];
    REQUIRE(rows.size() == 200);
    double lowest = 1e300;
    for (const auto& row : rows) {
        double c0 = row["c0_approx"].get<double>();
        CHECK(std::isfinite(c0));
        CHECK(c0 >= Scalar::parse(row["lower_bound"].get<std::string>()).to_double() - 1e-12);
        lowest = std::min(lowest, c0);
    }
    CHECK(lowest > -10);
}

TEST_CASE("float mode and overrides") {
    Json t = parse(R"({"task":"c0","data":{"kind":"family","family":"D1","k":"1"}})");
    TaskResult e = run_task(t);
    TaskResult f = run_task(t, {std::string("float"), 1e-9});
    CHECK(f.report["numeric_mode"] == "float");
    CHECK(f.report["epsilon"] == 1e-9);
    CHECK(std::fabs(f.report["threshold"]["c0_approx"].get<double>() - e.report["threshold"]["c0_approx"].get<double>()) < 1e-8);
    CHECK_THROWS_AS(run_task(t, {std::string("fuzzy"), std::nullopt}), InvalidInput);
}

TEST_CASE("coords task") {
    TaskResult r = run_task(parse(R"({"task":"coords","parameters":{"phi":{"num":["0","2"]},"tau0":"1/2","r_samples":[0.1,1,10]}})"));
    REQUIRE(r.tables.size() == 1);
    CHECK(r.tables[0].second.rfind("tau,t,s,r,phi,phi_over_r\n", 0) == 0);
    CHECK(r.report["coordinates"]["t_lower"]["divergent"] == true);
    TaskResult s = run_task(parse(R"({"task":"coords","data":{"kind":"point"},"parameters":{"c":"1"}})"));
    CHECK(s.report["coordinates"]["rows"] == 19);
}

TEST_CASE("exit codes and error objects") {
    CHECK(exit_code_for(InvalidInput("x")) == 2);
    CHECK(exit_code_for(InvariantBreach("x")) == 3);
    Json e = error_report("c0", InvariantBreach("broken"));
    CHECK(e["error"]["kind"] == "invariant-breach");
    CHECK(e["error"]["exit_code"] == 3);
}

TEST_CASE("binary: outputs, exit codes, byte-identical reruns") {
    fs::path dir = scratch("bin");
    fs::path ok = dir / "ok.json", bad = dir / "bad.json", broken = dir / "broken.json";
    std::ofstream(ok) << R"({"task":"table2"})";
    std::ofstream(bad) << R"({"task":"c0","data":{"kind":"point"},"unknown":true})";
    std::ofstream(broken) << "{ not json";
    CHECK(run_binary(ok, "--out " + (dir / "a").string()) == 0);
    CHECK(run_binary(ok, "--out " + (dir / "b").string()) == 0);
    CHECK(fs::exists(dir / "a" / "tables" / "table2.csv"));
    CHECK(slurp(dir / "a" / "report.json") == slurp(dir / "b" / "report.json"));
    CHECK(run_binary(bad, "--out " + (dir / "c").string()) == 2);
    Json err = Json::parse(slurp(dir / "c" / "report.json"));
    CHECK(err["error"]["kind"] == "invalid-input");
    CHECK(run_binary(broken, "--out " + (dir / "d").string()) == 2);
    CHECK(run_binary(ok, "--out " + (dir / "e").string() + " --mode sideways") == 2);
    std::string env = "MOMENTUM_OUT_DIR=" + (dir / "env").string() + " ";
    int rc = std::system((env + ANALYZE_BIN + " --task " + ok.string() + " > /dev/null").c_str());
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "env" / "report.json"));
    CHECK(slurp(dir / "env" / "tables" / "table2.csv").find('\r') == std::string::npos);
    fs::remove_all(dir);
}
