#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pclab/commands.hpp"
#include "pclab/complexity.hpp"
#include "pclab/graph.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace pclab;

namespace {

// run the installed binary and capture stdout + exit code
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(PCLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/pclab_test_") + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("tables command emits the expected fractions and re-parses") {
    RunConfig config;
    std::string csv = cmd_tables(7, config);
    CHECK(csv.find("23/18") != std::string::npos);
    CHECK(csv.find("29/22") != std::string::npos);
    CHECK(csv.find("91/66") != std::string::npos);

    // round-trip: parse every x,y back and check against the solver
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'k') continue;
        std::istringstream fields(line);
        std::string k_s, x_s, y_s;
        std::getline(fields, k_s, ',');
        std::getline(fields, x_s, ',');
        std::getline(fields, y_s, ',');
        int k = std::stoi(k_s);
        auto [x, y] = solve_xy(k);
        CHECK(parse_rational(x_s) == x);
        CHECK(parse_rational(y_s) == y);
        ++rows;
    }
    CHECK(rows == 6);  // k = 2..7

    // a single-row table
    std::string tiny = cmd_tables(2, config);
    CHECK(tiny.find("2,1/2,1/2,1,1,,") != std::string::npos);
}

TEST_CASE("outputs are byte-deterministic per configuration") {
    RunConfig config;
    config.seed = 9;
    CHECK(cmd_tables(9, config) == cmd_tables(9, config));
    CHECK(cmd_spectra(6, config) == cmd_spectra(6, config));
    CHECK(cmd_classes(config) == cmd_classes(config));
    RunConfig other = config;
    other.seed = 10;
    CHECK(cmd_tables(9, config) != cmd_tables(9, other));  // header carries the seed
}

TEST_CASE("every command prints its exercised label") {
    RunConfig config;
    CHECK(cmd_tables(4, config).find("# exercises: exponent-recurrence-table") !=
          std::string::npos);
    CHECK(cmd_spectra(5, config).find("# exercises: johnson-walk-spectral-gap") !=
          std::string::npos);
    CHECK(cmd_classes(config).find("problem-web-equivalence-classes") != std::string::npos);
}

TEST_CASE("spectra command stays within tolerance") {
    RunConfig config;
    std::string csv = cmd_spectra(8, config);
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        auto last_comma = line.rfind(',');
        double err = std::stod(line.substr(last_comma + 1));
        CHECK(err < 1e-9);
    }
}

TEST_CASE("embed command on the two-string example") {
    Graph k2 = make_graph(2, false, {{0, 1}});
    RunConfig config;
    std::string out = cmd_embed(k2, {{1, 0}, {0, 1}}, false, config);
    CHECK(out.find("\"gc_or_verdict\": true") != std::string::npos);
    CHECK(out.find("\"cycle_s5_verdict\": true") != std::string::npos);

    std::string zeros = cmd_embed(k2, {{0, 0}, {0, 0}}, false, config);
    CHECK(zeros.find("\"gc_or_verdict\": false") != std::string::npos);
    CHECK(zeros.find("\"cycle_s5_verdict\": false") != std::string::npos);

    Graph p3 = make_graph(3, false, {{0, 1}, {1, 2}});
    std::string sweep = cmd_embed(p3, {}, true, config);
    CHECK(sweep.find("\"agreements\": 512") != std::string::npos);
    CHECK(sweep.find("\"patterns\": 512") != std::string::npos);
}

TEST_CASE("run-alg verdicts through the command layer") {
    RunConfig config;
    config.k = 5;
    Graph forest = make_graph(6, false, {{0, 1}, {2, 3}});
    std::string no = cmd_run_alg_cycle(forest, 5, EdgeCounterMode::exact, config);
    CHECK(no.find("\"verdict\": false") != std::string::npos);
    Graph c4 = make_graph(6, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::string yes = cmd_run_alg_cycle(c4, 5, EdgeCounterMode::exact, config);
    CHECK(yes.find("\"verdict\": true") != std::string::npos);
    CHECK(yes.find("\"density_stage_fired\": false") != std::string::npos);
}

TEST_CASE("verify command flags unknown reductions") {
    RunConfig config;
    config.k = 4;
    std::ostringstream os;
    CHECK_THROWS_AS(cmd_verify("definitely-not-a-row", config, os), std::invalid_argument);
}

TEST_CASE("verify command accepts a single healthy row") {
    RunConfig config;
    config.k = 4;
    config.trials = 300;
    std::ostringstream os;
    int code = cmd_verify("dircycle-s-to-dirpath-st", config, os);
    CHECK(code == 0);
    CHECK(os.str().find("soundness") != std::string::npos);
    CHECK(os.str().find("# exercises: dircycle-s-to-dirpath-st") != std::string::npos);
}

TEST_CASE("binary end-to-end: tables, determinism, exit codes") {
    auto [code, out] = run_cli("tables --kmax 7");
    CHECK(code == 0);
    CHECK(out.find("23/18") != std::string::npos);

    auto second = run_cli("tables --kmax 7");
    CHECK(second.second == out);

    auto [bad_code, bad_out] = run_cli("verify definitely-not-a-row --k 4");
    CHECK(bad_code != 0);
    (void)bad_out;

    auto [json_code, json_out] = run_cli("tables --kmax 5 --format json");
    CHECK(json_code == 0);
    CHECK(json_out.find("\"sum\": \"23/18\"") != std::string::npos);
}

TEST_CASE("binary end-to-end: graph files drive embed and run-alg") {
    std::string graph_path = temp_file("k2.graph", "2 undirected\n0 1\n");
    std::string bits_path = temp_file("k2.bits", "10\n01\n");
    auto [code, out] = run_cli("embed --graph " + graph_path + " --x " + bits_path);
    CHECK(code == 0);
    CHECK(out.find("\"cycle_s5_verdict\": true") != std::string::npos);

    std::string forest = temp_file("forest.graph", "6 undirected\n0 1\n2 3\n");
    auto [rcode, rout] = run_cli("run-alg cycle-leq-k --graph " + forest + " --k 5");
    CHECK(rcode == 0);
    CHECK(rout.find("\"verdict\": false") != std::string::npos);
}
