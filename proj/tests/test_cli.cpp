#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

// End-to-end checks against the built binary: exit codes, output schema,
// run-to-run stability.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(COLLATZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("orbit 7 as json") {
    RunResult r = run_cli("orbit 7 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == "7");
    CHECK(j["terminal"] == "reached-one-cycle");
    CHECK(j["t_steps"] == 17);
    CHECK(j["set_size"] == 17);
    CHECK(j["odd"] == 6);
    CHECK(j["even"] == 11);
    CHECK(j["in_w"] == true);
    for (const auto& ratio : j["ratios"]) CHECK(ratio == "1/6");
}

TEST_CASE("orbit json output is byte-stable across runs") {
    RunResult a = run_cli("orbit 97 --json");
    RunResult b = run_cli("orbit 97 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("orbit 1 is not in W") {
    RunResult r = run_cli("orbit 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("verdict = not-in-w") != std::string::npos);
}

TEST_CASE("orbit --mod18 prints the residue profile") {
    RunResult r = run_cli("orbit 7 --mod18");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("mod18 = (1,2,0,3,1,0,1,2,0,1,1,0,1,0,0,3,1,0)") != std::string::npos);
}

TEST_CASE("verify upperbis writes its report") {
    namespace fs = std::filesystem;
    fs::path report = fs::temp_directory_path() / "collatz_upperbis_report.csv";
    RunResult r = run_cli("verify --suite upperbis --report " + report.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(report);
    std::string header;
    std::getline(in, header);
    CHECK(header == "N,bruteforce,relaxation");
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) ++lines;
    CHECK(lines == 5);
    fs::remove(report);
}

TEST_CASE("orbit rejects zero and junk with exit 2") {
    CHECK(run_cli("orbit 0").exit_code == 2);
    CHECK(run_cli("orbit twelve").exit_code == 2);
    CHECK(run_cli("orbit").exit_code == 2);
}

TEST_CASE("orbit handles a 38-digit start") {
    RunResult r = run_cli("orbit 31415926535897932384626433832795028800 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["terminal"] == "reached-one-cycle");
    CHECK(j["set_size"] == 785);
    CHECK(j["odd"] == 256);
}

TEST_CASE("enumerate anchors and exit codes") {
    RunResult r = run_cli("enumerate --alpha 2 --max-n 20");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("(2,1) -> 13") != std::string::npos);
    CHECK(r.output.find("count = 1") != std::string::npos);

    RunResult v = run_cli("enumerate --alpha 5 --max-n 7 --verify-bounds");
    REQUIRE(v.exit_code == 0);
    CHECK(v.output.find("(2,1,1,1,1) -> 7") != std::string::npos);
    CHECK(v.output.find("bounds=ok") != std::string::npos);

    CHECK(run_cli("enumerate --alpha 1").exit_code == 2);  // missing bound
    CHECK(run_cli("enumerate --alpha 1 --max-n 10 --max-index 3").exit_code == 2);
}

TEST_CASE("antecedents command") {
    RunResult r = run_cli("antecedents --upto 10 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["count"] == 10);
    CHECK(j["values"].size() == 10);
}

TEST_CASE("optimize prints the stationary data") {
    RunResult r = run_cli("optimize");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("w0 = 0.9998") != std::string::npos);
    CHECK(r.output.find("residual = ") != std::string::npos);
}

TEST_CASE("verify constants suite passes") {
    RunResult r = run_cli("verify --suite constants");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify rejects unknown suites with exit 2") {
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("census writes rows, members and csv") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "collatz_cli_test";
    fs::create_directories(dir);
    fs::path rows = dir / "rows.jsonl", members = dir / "members.jsonl", csv = dir / "sum.csv";

    RunResult r = run_cli("census --from 1 --to 26 --out " + rows.string() + " --members " +
                          members.string() + " --csv " + csv.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("upto=26") != std::string::npos);

    std::ifstream rows_in(rows);
    std::string line, last;
    while (std::getline(rows_in, line))
        if (!line.empty()) last = line;
    auto j = nlohmann::json::parse(last);
    CHECK(j["upto"] == 26);
    CHECK(j["residue_sums"][0] == 28);
    CHECK(j["residue_sums"][17] == 1);

    std::ifstream csv_in(csv);
    std::getline(csv_in, line);
    CHECK(line == "upto,w_count,resolved,unresolved,exponent");

    fs::remove_all(dir);
}

TEST_CASE("unknown subcommand exits 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}
