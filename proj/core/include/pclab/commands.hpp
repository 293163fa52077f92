#pragma once

#include "pclab/graph.hpp"
#include "pclab/verify.hpp"
#include "pclab/walkcheck.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pclab {

inline constexpr const char* kToolVersion = "0.1.0";

// Shared command configuration; identical configs produce identical bytes.
struct RunConfig {
    std::uint64_t seed = 1;
    int k = 5;
    int n = 8;
    int trials = 1000;
    std::string format = "csv";  // csv | json
};

std::string config_hash(const RunConfig& config, const std::string& command);

// Recurrence/exponent table for k = 2..k_max as CSV (or JSON when asked).
std::string cmd_tables(int k_max, const RunConfig& config);

// Runs the four verifiers for one registry row, or every row plus the
// graph-collision embedding check for "all". Returns the process exit code
// and streams the human-readable table plus one JSON line per report.
int cmd_verify(const std::string& name_or_all, const RunConfig& config, std::ostream& os);

// Derived 4n+1-vertex graph of the collision embedding plus both verdicts;
// exhaustive mode sweeps every bit pattern instead.
std::string cmd_embed(const Graph& g, const std::vector<std::vector<std::uint8_t>>& strings,
                      bool exhaustive, const RunConfig& config);

// Johnson spectra: formula vs eigendecomposition, all s <= n/2, n <= n_max.
std::string cmd_spectra(int n_max, const RunConfig& config);

// Runs the at-most-k cycle detection algorithm on a graph file.
std::string cmd_run_alg_cycle(const Graph& g, int k, EdgeCounterMode mode,
                              const RunConfig& config);

// Equivalence classes of the fixed-k problem web as JSON.
std::string cmd_classes(const RunConfig& config);

}  // namespace pclab
