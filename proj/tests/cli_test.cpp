#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "fixtures.hpp"

#ifndef CONFSEL_CLI_PATH
#error "CONFSEL_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(CONFSEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Fixture files live in a per-process scratch directory.
class Workspace {
public:
    Workspace() {
        dir_ = fs::temp_directory_path() /
               ("confsel_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        write("ga.cg", fixtures::kMBiasCg);
        write("gb.cg", fixtures::kChainConfounderCg);
        write("gc.cg", fixtures::kClosureCg);
    }
    ~Workspace() { std::error_code ec; fs::remove_all(dir_, ec); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream out(dir_ / name);
        out << text;
    }

private:
    fs::path dir_;
};

const Workspace& workspace() {
    static Workspace instance;
    return instance;
}

}  // namespace

TEST_CASE("dsep subcommand") {
    const auto& ws = workspace();
    const auto separated = run_cli("dsep " + ws.path("gb.cg") + " --x A --y X2 --given X1");
    REQUIRE(separated.exit_code == 0);
    const json payload = json::parse(separated.output);
    CHECK(payload["separated"] == true);
    CHECK(payload["query"]["x"] == json::array({"A"}));

    const auto opened =
        run_cli("dsep " + ws.path("ga.cg") + " --backdoor --x A --y Y --given L");
    REQUIRE(opened.exit_code == 0);
    CHECK(json::parse(opened.output)["separated"] == false);

    const auto unknown = run_cli("dsep " + ws.path("ga.cg") + " --x A --y Z");
    CHECK(unknown.exit_code == 3);

    const auto bad_file = run_cli("dsep " + ws.path("nothere.cg") + " --x A --y Y");
    CHECK(bad_file.exit_code == 2);
}

TEST_CASE("check subcommand") {
    const auto& ws = workspace();
    CHECK(json::parse(run_cli("check " + ws.path("gb.cg") + " --set X1").output)["sufficient"] ==
          true);
    CHECK(json::parse(run_cli("check " + ws.path("ga.cg") + " --set L").output)["sufficient"] ==
          false);
    CHECK(json::parse(run_cli("check " + ws.path("gb.cg") + " --set \"\"").output)["sufficient"] ==
          false);

    // Post-treatment member: semantic error.
    ws.write("mediator.cg",
             "node A role=treatment\nnode M role=covariate\nnode Y role=outcome\n"
             "edge A M\nedge M Y\n");
    CHECK(run_cli("check " + ws.path("mediator.cg") + " --set M").exit_code == 1);
}

TEST_CASE("select subcommand") {
    const auto& ws = workspace();
    {
        const auto result = run_cli("select " + ws.path("gb.cg") + " --criterion ay-star");
        REQUIRE(result.exit_code == 0);
        const json report = json::parse(result.output)["report"];
        CHECK(report["output_c"] == json::array({"X1"}));
        CHECK(report["sufficient"] == true);
        CHECK(report["stable"] == true);
        CHECK(report["queries_used"].get<int>() > 0);
    }
    {
        const auto result = run_cli("select " + ws.path("gb.cg") + " --criterion ya-star");
        CHECK(json::parse(result.output)["report"]["output_c"] == json::array({"X2"}));
    }
    {
        const auto result =
            run_cli("select " + ws.path("ga.cg") + " --criterion disjunctive --s L");
        const json report = json::parse(result.output)["report"];
        CHECK(report["output_c"] == json::array());
        CHECK(report["sufficient"] == true);
    }
    {
        const auto result = run_cli("select " + ws.path("gb.cg") + " --criterion cap");
        const json report = json::parse(result.output)["report"];
        CHECK(report["output_c"] == json::array());
        CHECK(report["sufficient"] == false);
        CHECK_FALSE(report["warnings"].empty());
    }
    CHECK(run_cli("select " + ws.path("gb.cg") + " --criterion nonsense").exit_code == 1);
}

TEST_CASE("minimal and closure subcommands") {
    const auto& ws = workspace();
    CHECK(json::parse(run_cli("minimal " + ws.path("gb.cg")).output)["minimal_sets"] ==
          json::array({json::array({"X1"}), json::array({"X2"})}));
    CHECK(json::parse(run_cli("minimal " + ws.path("ga.cg")).output)["minimal_sets"] ==
          json::array({json::array()}));
    CHECK(json::parse(run_cli("minimal " + ws.path("gc.cg")).output)["minimal_sets"] ==
          json::array({json::array({"S1", "S2"})}));

    const auto closure =
        run_cli("closure " + ws.path("gc.cg") + " --set S1,S2,A,Y");
    CHECK(json::parse(closure.output)["closure"] ==
          json::array({"A", "S1", "S2", "Y", "Z1", "Z3"}));
    const auto closed =
        run_cli("closure " + ws.path("gb.cg") + " --set X1,X2,A,Y");
    CHECK(json::parse(closed.output)["closure"] == json::array({"A", "X1", "X2", "Y"}));
}

TEST_CASE("simulate, estimate and data-driven selection") {
    const auto& ws = workspace();
    const std::string csv = ws.path("gb_sample.csv");
    const auto simulated =
        run_cli("simulate " + ws.path("gb.cg") + " --n 20000 --seed 7 --out " + csv);
    REQUIRE(simulated.exit_code == 0);

    const auto with_x1 =
        run_cli("estimate " + csv + " --treatment A --outcome Y --adjust X1");
    REQUIRE(with_x1.exit_code == 0);
    CHECK(std::abs(json::parse(with_x1.output)["estimate"].get<double>() - 1.5) < 0.05);

    const auto with_x2 =
        run_cli("estimate " + csv + " --treatment A --outcome Y --adjust X2");
    CHECK(std::abs(json::parse(with_x2.output)["estimate"].get<double>() - 1.5) < 0.05);

    const std::string ga_csv = ws.path("ga_sample.csv");
    REQUIRE(run_cli("simulate " + ws.path("ga.cg") + " --n 20000 --seed 7 --out " + ga_csv)
                .exit_code == 0);
    const auto biased = run_cli("estimate " + ga_csv + " --adjust L");
    CHECK(std::abs(json::parse(biased.output)["estimate"].get<double>() - 1.5) > 0.05);
    const auto unadjusted = run_cli("estimate " + ga_csv + " --adjust \"\"");
    CHECK(std::abs(json::parse(unadjusted.output)["estimate"].get<double>() - 1.5) < 0.05);

    // Data-driven boundary selection recovers the graph answers.
    const auto ay = run_cli("select-data " + csv +
                            " --criterion ay-star --treatment A --outcome Y --alpha 0.01");
    REQUIRE(ay.exit_code == 0);
    const json ay_report = json::parse(ay.output)["report"];
    CHECK(ay_report["output_c"] == json::array({"X1"}));
    CHECK(ay_report["sufficient"].is_null());
    CHECK(ay_report["stable"] == true);

    const auto ya = run_cli("select-data " + csv +
                            " --criterion ya-star --treatment A --outcome Y --alpha 0.01");
    CHECK(json::parse(ya.output)["report"]["output_c"] == json::array({"X2"}));

    // Structural criteria need a graph.
    CHECK(run_cli("select-data " + csv +
                  " --criterion pretreatment --treatment A --outcome Y")
              .exit_code == 1);

    // Too few rows for the Fisher-z preconditions with this candidate count.
    ws.write("tiny.csv", "A,Y,X1,X2\n1,2,3,4\n2,3,4,5\n3,4,5,6\n4,5,6,7\n5,6,7,8\n");
    CHECK(run_cli("select-data " + ws.path("tiny.csv") +
                  " --criterion ay-star --treatment A --outcome Y")
              .exit_code == 1);

    // Missing SEM parameters in the graph file.
    CHECK(run_cli("simulate " + ws.path("gc.cg") + " --n 10 --seed 1 --out " +
                  ws.path("gc.csv"))
              .exit_code == 2);
}

TEST_CASE("text output and determinism") {
    const auto& ws = workspace();
    const auto text = run_cli("--text dsep " + ws.path("gb.cg") + " --x A --y X2 --given X1");
    REQUIRE(text.exit_code == 0);
    CHECK(text.output.find("separated") != std::string::npos);

    const auto first = run_cli("select " + ws.path("gb.cg") + " --criterion cup");
    const auto second = run_cli("select " + ws.path("gb.cg") + " --criterion cup");
    CHECK(first.output == second.output);

    // The worker-count flag never changes results.
    const auto jobs = run_cli("--jobs 4 select " + ws.path("gb.cg") + " --criterion cup");
    CHECK(jobs.output == first.output);
}
