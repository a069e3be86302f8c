#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "regraph/format.hpp"

#ifndef REGRAPH_CLI_PATH
#error "REGRAPH_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(REGRAPH_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        output += buffer.data();
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

} // namespace

TEST_CASE("spectrum --format json emits the documented object") {
    const RunResult r = run_cli("spectrum --n 2 --lambda 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"n\":2,\"lambda\":1,\"values\":[1,0.618033988750,0.381966011250,"
          "0.236067977500],\"quotient\":1.61803398875}\n");
}

TEST_CASE("spectrum JSON round-trips byte-exactly") {
    const RunResult r = run_cli("spectrum --n 5 --lambda 0.7351 --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(r.output);
    std::string rebuilt = "{\"n\":" + std::to_string(parsed["n"].get<int>()) +
                          ",\"lambda\":" +
                          regraph::format_real(parsed["lambda"].get<double>()) +
                          ",\"values\":[";
    bool first = true;
    for (const auto& v : parsed["values"]) {
        if (!first) rebuilt += ",";
        rebuilt += regraph::format_real(v.get<double>());
        first = false;
    }
    rebuilt += "],\"quotient\":" +
               regraph::format_real(parsed["quotient"].get<double>()) + "}\n";
    CHECK(rebuilt == r.output);
}

TEST_CASE("spectrum handles the Dirichlet point and the infinite parameter") {
    const RunResult dirichlet = run_cli("spectrum --n 3 --lambda 0.3333333333333333");
    CHECK(dirichlet.exit_code == 0);
    CHECK(dirichlet.output.find("(0.333333333333, 0.333333333333, "
                                "0.333333333333, 0.333333333333, "
                                "0.333333333333)") != std::string::npos);

    const RunResult degenerate = run_cli("spectrum --n 4 --lambda inf");
    CHECK(degenerate.exit_code == 0);
    CHECK(degenerate.output.find("(inf, 1, 0, 0, 0, 0)") != std::string::npos);
}

TEST_CASE("domain violations exit with code 2 and a parsable token") {
    const RunResult r = run_cli("spectrum --n 2 --lambda 0.3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.rfind("domain_error:", 0) == 0);
    CHECK(r.output.find("\n") == r.output.size() - 1);  // single line
}

TEST_CASE("unattainable Schmidt indices exit with code 3") {
    const RunResult r = run_cli("schmidt-interval --n 8 --T 5");
    CHECK(r.exit_code == 3);
    CHECK(r.output.rfind("not_representable:", 0) == 0);
}

TEST_CASE("schmidt-interval reports the certified interval") {
    const RunResult r = run_cli("schmidt-interval --n 8 --T 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"lo\":0.125") != std::string::npos);
    const RunResult half_line = run_cli("schmidt-interval --n 2 --T 1 --format json");
    CHECK(half_line.output.find("\"hi\":\"inf\"") != std::string::npos);
}

TEST_CASE("constants prints tau, delta and theta") {
    const RunResult r = run_cli("constants");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("tau   = 0.5693") != std::string::npos);
    CHECK(r.output.find("delta = 2.2564") != std::string::npos);
    CHECK(r.output.find("theta = 3.5128") != std::string::npos);
}

TEST_CASE("bounds renders the tabulated pair for n = 4") {
    const RunResult r = run_cli("bounds --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("6.54138") != std::string::npos);
    CHECK(r.output.find("6.287") != std::string::npos);
}

TEST_CASE("threshold and dual subcommands respond") {
    const RunResult t = run_cli("threshold --n 8 --j 3 --format json");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("\"classification\":\"crosses_once\"") != std::string::npos);

    const RunResult d = run_cli("dual --n 2 --w 3 --format json");
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("\"values\":[3,2.30277563773") != std::string::npos);

    const RunResult p = run_cli("psi --n 2 --lambda 1 --format json");
    CHECK(p.exit_code == 0);
    CHECK(p.output.find("\"psi_lower\":[-0.250000000000,") != std::string::npos);

    const RunResult rel = run_cli("relations --n 2 --lambda 1 --format json");
    CHECK(rel.exit_code == 0);
    CHECK(rel.output.find("\"laurent_gap\":") != std::string::npos);
}

TEST_CASE("psi rejects the infinite parameter") {
    const RunResult r = run_cli("psi --n 2 --lambda inf");
    CHECK(r.exit_code == 2);
    CHECK(r.output.rfind("domain_error:", 0) == 0);
}

TEST_CASE("sweep output is byte-identical across runs and modes") {
    const std::string args = "sweep --n 2 --lambda-min 0.5 --lambda-max 4 --steps 8";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    const RunResult serial = run_cli(args + " --serial");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == serial.output);
    CHECK(a.output.rfind("lambda,l1,l2,l3,l4\n", 0) == 0);
    CHECK(a.output.find("0.500000000000,0.500000000000,0.500000000000,"
                        "0.500000000000,0.500000000000\n") != std::string::npos);
}

TEST_CASE("verify --quick passes on a fresh build") {
    const RunResult r = run_cli("verify --quick");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}
