#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string dir = "/tmp/zonoehr_cli_test";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) return {-1, "mkdir failed"};
    std::string out_path = dir + "/out.txt";
    std::string in_path = dir + "/in.txt";
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    std::string cmd = std::string(ZONOEHR_CLI_PATH) + " " + args + " < " + in_path + " > " +
                      out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out_path)};
}

nlohmann::json parse_out(const RunResult& r) { return nlohmann::json::parse(r.out); }

const char* kExceptionalDoc = R"({"dim":3,"generators":[[1,1,0],[-1,1,0],[1,1,2]]})";
const char* kCubeDoc = R"({"dim":3,"generators":[[1,0,0],[0,1,0],[0,0,1]]})";

}  // namespace

TEST_CASE("cli ehrhart") {
    RunResult r = run_cli("--json --no-timings ehrhart --verify", kExceptionalDoc);
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j["outputs"]["ehr"] == std::vector<std::string>{"1", "3", "6", "4"});
    CHECK(j["outputs"]["c"] == std::vector<std::string>{"0", "3", "0"});
    CHECK(j["outputs"]["hstar"] == std::vector<std::string>{"1", "10", "13", "0"});
    CHECK(j["outputs"]["hstar_via_eulerian"] == std::vector<std::string>{"1", "10", "13", "0"});
    CHECK(j["outputs"]["degree"] == 2);
    CHECK(j["outputs"]["interior_count"] == "0");
    CHECK(j["verdicts"]["stanley_equals_oracle"] == true);

    r = run_cli("--json --no-timings ehrhart", kCubeDoc);
    REQUIRE(r.exit_code == 0);
    j = parse_out(r);
    CHECK(j["outputs"]["ehr"] == std::vector<std::string>{"1", "3", "3", "1"});
    CHECK(j["outputs"]["c"] == std::vector<std::string>{"0", "0", "0"});
    CHECK(j["outputs"]["hstar"] == std::vector<std::string>{"1", "4", "1", "0"});
}

TEST_CASE("cli ehrhart input errors exit 2") {
    CHECK(run_cli("ehrhart", "this is not json").exit_code == 2);
    CHECK(run_cli("ehrhart", R"({"dim": 2})").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand", "").exit_code == 2);
}

TEST_CASE("cli ehrhart budget exceeded exits 4") {
    RunResult r = run_cli("ehrhart --verify --budget 5", kExceptionalDoc);
    CHECK(r.exit_code == 4);
}

TEST_CASE("cli classify") {
    RunResult r = run_cli("--json --no-timings classify zono2d 2 3");
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j["verdicts"]["accepted"] == true);
    CHECK(j["witness"]["document"]["generators"] ==
          std::vector<std::vector<long long>>{{1, 0}, {0, 2}, {1, 2}});

    r = run_cli("--json --no-timings classify scott 9/2 9/2");
    j = parse_out(r);
    CHECK(j["verdicts"]["accepted"] == true);
    CHECK(j["verdicts"]["case"] == "Scott-(iii)");

    r = run_cli("--json --no-timings classify hstar3d-deg2 7 4");
    REQUIRE(r.exit_code == 0);
    j = parse_out(r);
    CHECK(j["verdicts"]["accepted"] == false);
    CHECK(j["verdicts"]["reason"].get<std::string>().find("mod 6") != std::string::npos);

    CHECK(run_cli("classify unknown-scheme 1 2").exit_code == 2);
    CHECK(run_cli("classify zono2d 1").exit_code == 2);
    CHECK(run_cli("classify zono2d x y").exit_code == 2);
}

TEST_CASE("cli width") {
    RunResult r = run_cli("--json --no-timings width", kCubeDoc);
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j["outputs"]["lattice_width"] == "1");
    CHECK(j["outputs"]["width1_decomposition"]["factor"]["generators"] ==
          std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

    r = run_cli("--json --no-timings width", kExceptionalDoc);
    j = parse_out(r);
    CHECK(j["outputs"]["lattice_width"] == "2");
    CHECK(j["outputs"]["width1_decomposition"].is_null());
    CHECK(j["outputs"]["facet_widths"].size() == 3);
}

TEST_CASE("cli eulerian") {
    RunResult r = run_cli("--json --no-timings eulerian 3 2");
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    REQUIRE(j["outputs"]["polynomials"].size() == 1);
    CHECK(j["outputs"]["polynomials"][0]["coeffs"] == std::vector<std::string>{"0", "2"});
    CHECK(j["outputs"]["polynomials"][0]["display"] == "2*t");

    r = run_cli("--json --no-timings eulerian 4");
    j = parse_out(r);
    CHECK(j["outputs"]["polynomials"].size() == 4);

    CHECK(run_cli("eulerian 12").exit_code == 2);
}

TEST_CASE("cli realize") {
    RunResult r = run_cli("--json --no-timings realize 2d 3 0");
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j["outputs"]["document"]["generators"] ==
          std::vector<std::vector<long long>>{{1, 0}, {0, 4}});
    CHECK(j["outputs"]["ehr"] == std::vector<std::string>{"1", "5", "4"});

    CHECK(run_cli("realize 2d 5 3").exit_code == 2);  // inadmissible
    CHECK(run_cli("realize 4d 1 1").exit_code == 2);
}

TEST_CASE("cli census") {
    std::string out = "/tmp/zonoehr_cli_test/census.jsonl";
    RunResult r = run_cli("--json --no-timings census --dim 2 --max-entry 1 --max-generators 2 --out " + out);
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j["outputs"]["instances"] == 14);
    CHECK(j["outputs"]["violations"] == 0);

    std::istringstream lines(slurp(out));
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        auto rec = nlohmann::json::parse(line);
        CHECK(rec["ok"] == true);
        ++n;
    }
    CHECK(n == 14);

    // byte-identical reports and records across runs of the same input
    std::string first_records = slurp(out);
    RunResult r2 = run_cli("--json --no-timings census --dim 2 --max-entry 1 --max-generators 2 --out " + out);
    CHECK(r2.out == r.out);
    CHECK(slurp(out) == first_records);

    CHECK(run_cli("census --dim 2 --max-entry 3 --max-instances 5").exit_code == 4);
}
