#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(NCORES_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("count: text table ends at the Fibonacci value") {
    const auto r = run_cli("count --set positive --n-max 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("10\t89") != std::string::npos);
}

TEST_CASE("count: JSON carries the Padovan values as decimal strings") {
    const auto r = run_cli("count --set mult+:2 --n-max 11 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["m_spec"] == "mult+:2");
    CHECK(j["values"] ==
          nlohmann::json({"1", "1", "1", "2", "2", "3", "4", "5", "7", "9", "12", "16"}));
}

TEST_CASE("count: variant and method validation") {
    CHECK(run_cli("count --set positive --n-max 5 --method closed").exit_code == 0);
    CHECK(run_cli("count --set all --n-max 5 --method closed").exit_code == 0);
    CHECK(run_cli("count --set mult:3 --n-max 5 --method closed").exit_code == 0);
    CHECK(run_cli("count --set atleast:2 --n-max 5 --method closed").exit_code == 2);
    CHECK(run_cli("count --set positive --n-max 5 --variant p --method series").exit_code == 2);
    CHECK(run_cli("count --n-max 5 --variant odd").exit_code == 0);
    CHECK(run_cli("count --set mult:3 --n-max 5 --variant odd").exit_code == 2);
    const auto odd = run_cli("count --n-max 5 --variant odd --format json");
    CHECK(nlohmann::json::parse(odd.output)["values"] ==
          nlohmann::json({"1", "1", "2", "4", "7", "17"}));
}

TEST_CASE("usage errors exit 2, computation errors exit 1") {
    CHECK(run_cli("count --set positive").exit_code == 2);            // missing --n-max
    CHECK(run_cli("count --set positive --n-max 5 --bogus").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("count --set 'mult:x' --n-max 4").exit_code == 1);  // parse error in the spec
    CHECK(run_cli("count --set all --n-max 40 --method brute").exit_code == 1);  // work limit
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("list prints matching partitions deterministically") {
    const auto r = run_cli("list --n 4 --set positive");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[]\n[1]\n[2]\n[2,1]\n[3]\n");
    const auto j = run_cli("list --n 4 --set positive --format json");
    CHECK(nlohmann::json::parse(j.output) ==
          nlohmann::json::parse("[[],[1],[2],[2,1],[3]]"));
}

TEST_CASE("render: ascii abacus and svg") {
    const auto r = run_cli("render --abacus 2:0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "● ● ●\n○ ● ●\n");
    const auto svg = run_cli("render --partition 1 --n 2 --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.find("<svg") != std::string::npos);
    CHECK(svg.output.find("fill=\"white\"") != std::string::npos);
    // A non-core partition is a computation error.
    CHECK(run_cli("render --partition 3 --n 2").exit_code == 1);
    CHECK(run_cli("render").exit_code == 2);
    // The empty partition renders as an all-black column pair.
    const auto empty = run_cli("render --partition '' --n 2");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output == "● ●\n● ●\n");
}

TEST_CASE("verify subcommand exits zero on passing suites") {
    const auto r = run_cli("verify --suite oddeven-identities --n-max 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(run_cli("verify --suite no-such-suite --n-max 4").exit_code == 2);
}

TEST_CASE("oddeven table renders identity columns") {
    const auto r = run_cli("oddeven --n-max 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    const auto j = run_cli("oddeven --n-max 6 --format json");
    const auto rows = nlohmann::json::parse(j.output);
    CHECK(rows.size() == 7);
    CHECK(rows[3]["O"] == "4");
    CHECK(rows[3]["eo_identity"] == true);
}

TEST_CASE("oeis subcommand matches locally and gates remote lookups") {
    const auto r = run_cli("oeis --prefix 1,1,1,2,2,3,4,5,7,9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("A000931") != std::string::npos);
    // Remote lookup without the env opt-in is an error even with --remote.
    const auto gated = run_cli("oeis --prefix 1,1,2,3,5 --remote");
    CHECK(gated.exit_code == 1);
    CHECK(gated.output.find("disabled") != std::string::npos);
}
