#include "pclab/commands.hpp"
#include "pclab/graph.hpp"
#include "pclab/walkcheck.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

pclab::Graph load_graph(const std::string& path) {
    std::string text = slurp(path);
    if (!text.empty() && text.front() == '{') return pclab::graph_from_json(text);
    return pclab::from_edge_list(text);
}

std::vector<std::vector<std::uint8_t>> load_bit_strings(const std::string& path, int n) {
    std::istringstream in(slurp(path));
    std::vector<std::vector<std::uint8_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::uint8_t> row;
        for (char c : line) {
            if (c == '0' || c == '1') row.push_back(c == '1' ? 1 : 0);
        }
        if (!row.empty()) out.push_back(std::move(row));
    }
    if (static_cast<int>(out.size()) != n)
        throw CLI::ValidationError("expected one bit string per vertex (" + std::to_string(n) +
                                   ")");
    return out;
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }
    out << payload;
    return out.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"query-model laboratory for path/cycle containment problems"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    pclab::RunConfig config;
    std::string out_path;
    app.add_option("--seed", config.seed, "random seed recorded in every output");
    app.add_option("--k", config.k, "length parameter");
    app.add_option("--n", config.n, "size parameter");
    app.add_option("--trials", config.trials, "sample count for non-exhaustive checks");
    app.add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* tables = app.add_subcommand("tables", "recurrence and exponent table");
    int k_max = 12;
    tables->add_option("--kmax", k_max, "largest k in the table");

    auto* verify = app.add_subcommand("verify", "run the reduction verifiers");
    std::string target = "all";
    verify->add_option("name", target, "registry row name, or 'all'");

    auto* embed = app.add_subcommand("embed", "graph-collision embedding");
    std::string graph_path, bits_path;
    bool exhaustive = false;
    embed->add_option("--graph", graph_path, "graph file (edge list or json)")->required();
    embed->add_option("--x", bits_path, "bit strings, one per vertex");
    embed->add_flag("--exhaustive", exhaustive, "sweep every bit pattern");

    auto* spectra = app.add_subcommand("spectra", "johnson spectral gaps");
    int n_max = 8;
    spectra->add_option("--nmax", n_max, "largest ground-set size");

    auto* run_alg = app.add_subcommand("run-alg", "run an algorithm skeleton");
    std::string alg = "cycle-leq-k";
    std::string run_graph_path;
    std::string counter_mode = "exact";
    run_alg->add_option("algorithm", alg, "cycle-leq-k");
    run_alg->add_option("--graph", run_graph_path, "input graph file")->required();
    run_alg->add_option("--edge-counter", counter_mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));

    auto* classes = app.add_subcommand("classes", "equivalence classes of the problem web");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables->parsed()) return emit(pclab::cmd_tables(k_max, config), out_path);
        if (verify->parsed()) {
            std::ostringstream os;
            int code = pclab::cmd_verify(target, config, os);
            int io = emit(os.str(), out_path);
            return code != 0 ? code : io;
        }
        if (embed->parsed()) {
            pclab::Graph g = load_graph(graph_path);
            std::vector<std::vector<std::uint8_t>> strings;
            if (!exhaustive) strings = load_bit_strings(bits_path, g.n());
            return emit(pclab::cmd_embed(g, strings, exhaustive, config), out_path);
        }
        if (spectra->parsed()) return emit(pclab::cmd_spectra(n_max, config), out_path);
        if (run_alg->parsed()) {
            if (alg != "cycle-leq-k") {
                std::cerr << "unknown algorithm '" << alg << "'\n";
                return 2;
            }
            pclab::Graph g = load_graph(run_graph_path);
            auto mode = counter_mode == "exact" ? pclab::EdgeCounterMode::exact
                                                : pclab::EdgeCounterMode::sampled;
            return emit(pclab::cmd_run_alg_cycle(g, config.k, mode, config), out_path);
        }
        if (classes->parsed()) return emit(pclab::cmd_classes(config), out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
