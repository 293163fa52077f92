#pragma once

#include "pclab/graph.hpp"
#include "pclab/oracles.hpp"
#include "pclab/problems.hpp"
#include "pclab/rational.hpp"

#include <cstdint>
#include <vector>

namespace pclab {

// Walk cost inputs: setup/update/check query costs, spectral gap, marked
// fraction. cost() is S + (1/sqrt(eps)) (U/sqrt(delta) + C).
struct WalkCostModel {
    double setup = 0;
    double update = 0;
    double check = 0;
    double spectral_gap = 1;
    double marked_fraction = 1;
};

double mnrs_cost(const WalkCostModel& model);

// Johnson graph J(n, s): s-subsets of [n], adjacent when they differ in one
// element. Regular of degree s(n-s).
Graph johnson_graph(int n, int s);

double johnson_gap_formula(int n, int s);  // n / (s (n - s))

// 1 - lambda_2 of the A/d walk operator by dense eigendecomposition; n <= 12.
double johnson_gap_computed(int n, int s);

// Smallest nonzero eigenvalue of the walk Laplacian of J(n1,s1) x J(n2,s2)
// (Laplacians add across a Cartesian product); equals the min of the factor
// gaps.
double johnson_product_gap_computed(int n1, int s1, int n2, int s2);

// Fraction of (W_1, W_{k-1}) subset pairs of size s marked by one planted
// path: (C(L-1, s-1)/C(L, s))^2 = (s/L)^2; zero with nothing planted.
Rational marked_fraction(int layer_size, int s, bool planted);

// Layered-path instance: directed graph whose arcs only join consecutive
// layers; first and last layer have size r.
struct LayeredInstance {
    Graph g;
    std::vector<int> layer;  // vertex -> 0..k
    int k = 0;
    int r = 0;
};

// Keeps only arcs between consecutive layers of the given map.
LayeredInstance make_layered_instance(const Graph& g, const std::vector<int>& layers, int k);

// Random layered instance with balanced middle layers; optionally plants one
// full path. Noise arcs respect the layer structure.
LayeredInstance random_layered_instance(int n, int k, int r, bool plant, double arc_density,
                                        std::uint64_t seed);

// floor(n/(k+1)) per layer with the remainder spread over the first layers
std::vector<int> balanced_layer_sizes(int n, int k);

// Classical analogue of the nested layered-path walk: sampled subsets of the
// boundary layers with reachability flags, walk-style resampling, recursion
// on the flagged sub-instance of length k-2, and an exhaustive completion
// pass so the answer is always exact. Schedule holds the subset size per
// recursion level (floor((k-1)/2) entries).
Witness layered_path_search(const LayeredInstance& inst, const std::vector<int>& schedule,
                            std::uint64_t seed);

enum class EdgeCounterMode { exact, sampled };

// Accepts when the (estimated) edge count reaches (3/2) threshold; the
// sampled estimator fails with probability at most 1/n.
bool approx_edge_count(const CountedOracle& oracle, double threshold, EdgeCounterMode mode,
                       std::uint64_t seed);

struct CycleRunStats {
    bool verdict = false;
    bool density_fired = false;
    double density_threshold = 0;  // the edge bound the density stage tests
    std::uint64_t queries = 0;
};

// Length-at-most-k cycle detection: density stage (edge count against
// 100 l n^{1+1/l}, a sound YES via the even-cycle density bound), then the
// sparse stage looping the exact length-j detector for j = 3..k.
CycleRunStats cycle_leq_k(const ProblemInstance& instance, int k, EdgeCounterMode mode,
                          std::uint64_t seed);

struct SparseWalkBlock {
    double q = 0;  // degree scale
    double t = 0;  // vertices with degree near q
    double r = 0;  // stored per block
    double s = 0;  // resampled per step
};

struct SparseWalkModel {
    int ell = 0;
    double n = 0;
    double mbar = 0;
    std::vector<SparseWalkBlock> blocks;
    WalkCostModel cost;
};

// Instantiates the degree-block walk parameters r_i/r_j = s_i/s_j =
// sqrt(t_i/t_j), s_1 = 1, r_1 = sqrt(t_1) n^{1/2 - 1/(l+1)} and checks the
// three cost chains (setup, update-product, checking domination). Throws
// when mbar < n^{1 + 1/(l+1)} or a chain fails.
SparseWalkModel sparse_walk_params(int n, double mbar, int ell,
                                   const std::vector<double>& t_values);

}  // namespace pclab
