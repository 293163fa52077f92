#pragma once

#include "pclab/graph.hpp"
#include "pclab/oracle.hpp"
#include "pclab/problems.hpp"

#include <atomic>
#include <memory>
#include <string>
#include <vector>

namespace pclab {

// Exhaustive-search guards. Everything in this module runs in n^{O(k)};
// the guard stops accidental blowups, it is not a soft limit.
inline constexpr int kOracleMaxVertices = 32;
inline constexpr int kOracleMaxLength = 9;

struct Witness {
    enum class Kind { none, path, cycle };
    Kind kind = Kind::none;
    std::vector<int> vertices;  // path: endpoints inclusive; cycle: closed walk start omitted at end

    bool empty() const { return kind == Kind::none; }
};

std::string witness_to_json(const Witness& w);

// Ground truth by exhaustive enumeration (depth-first search over simple
// paths/cycles with a visited mask). Works for every tag of the grammar,
// promise or not; the promise flag is ignored here, only the underlying
// predicate is evaluated.
bool decide(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned = {});
bool decide(const ProblemInstance& instance);

// Witness present iff decide holds; the returned witness always passes
// check_witness.
Witness find(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned = {});
Witness find(const ProblemInstance& instance);

bool check_witness(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned,
                   const Witness& w);

// Promise validation by exhaustive connectivity/cycle analysis. Only defined
// for Prom tags. Directed 2-cycles never count as cycles.
bool promise_holds(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned = {});
bool promise_holds(const ProblemInstance& instance);

// helpers shared with the reductions and their tests
bool connected(const Graph& g, int s, int t);        // undirected connectivity
bool reachable(const Graph& g, int s, int t);        // directed reachability
bool has_any_cycle(const Graph& g);                  // length >= 3
bool has_any_cycle_through(const Graph& g, int s);   // length >= 3 through s

// --- graph collision -------------------------------------------------------

struct GCInstance {
    Graph g;  // undirected, known in full; only x is charged for queries
    std::shared_ptr<BitOracle> x;
};

GCInstance make_gc_instance(Graph g, std::vector<std::uint8_t> bits);

// 1 iff some edge {v,w} has x_v = x_w = 1.
bool graph_collision(const GCInstance& instance);

// n strings of n bits each; bit j of string i is queried as (i, j).
class BitMatrixOracle {
  public:
    explicit BitMatrixOracle(std::vector<std::vector<std::uint8_t>> rows);
    bool query(std::size_t i, std::size_t j) const;
    std::size_t rows() const { return rows_.size(); }
    std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }

  private:
    std::vector<std::vector<std::uint8_t>> rows_;
    mutable std::atomic<std::uint64_t> count_{0};
};

struct GcOrInstance {
    Graph g;  // undirected on n vertices
    std::shared_ptr<BitMatrixOracle> xs;  // n strings of n bits; string i belongs to vertex i
};

GcOrInstance make_gc_or_instance(Graph g, std::vector<std::vector<std::uint8_t>> strings);

// Graph collision on derived bits y_i = OR of string i.
bool gc_or(const GcOrInstance& instance);

}  // namespace pclab
