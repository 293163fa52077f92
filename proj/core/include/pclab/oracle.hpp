#pragma once

#include "pclab/graph.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>

namespace pclab {

// Adjacency-query gate. Every edge probe goes through query(), which counts
// it; derived views forward to their base oracle, so one derived query
// increments every oracle it touches. Counters are atomic so verification
// workers can share instances.
class CountedOracle {
  public:
    CountedOracle(int n, bool directed) : n_(n), directed_(directed) {}
    virtual ~CountedOracle() = default;
    CountedOracle(const CountedOracle&) = delete;
    CountedOracle& operator=(const CountedOracle&) = delete;

    // u != v, both in range; undirected oracles answer symmetrically.
    bool query(int u, int v) const;

    std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }
    int n() const { return n_; }
    bool directed() const { return directed_; }

    // base oracle of a derived view, nullptr for a ground oracle
    virtual const CountedOracle* base() const { return nullptr; }

  private:
    virtual bool query_impl(int u, int v) const = 0;
    int n_;
    bool directed_;
    mutable std::atomic<std::uint64_t> count_{0};
};

class GraphOracle final : public CountedOracle {
  public:
    explicit GraphOracle(Graph g) : CountedOracle(g.n(), g.directed()), graph_(std::move(g)) {}
    const Graph& graph() const { return graph_; }

  private:
    bool query_impl(int u, int v) const override { return graph_.has_edge(u, v); }
    Graph graph_;
};

// Lazy derived view: adjacency is a pure function of (base graph, captured
// tape data); the callback makes its base probes through base->query() so
// counting cascades.
class LazyViewOracle final : public CountedOracle {
  public:
    using EdgeFn = std::function<bool(const CountedOracle& base, int u, int v)>;
    LazyViewOracle(int n, bool directed, std::shared_ptr<const CountedOracle> base, EdgeFn fn)
        : CountedOracle(n, directed), base_(std::move(base)), fn_(std::move(fn)) {}

    const CountedOracle* base() const override { return base_.get(); }

  private:
    bool query_impl(int u, int v) const override { return fn_(*base_, u, v); }
    std::shared_ptr<const CountedOracle> base_;
    EdgeFn fn_;
};

std::shared_ptr<CountedOracle> oracle_for(Graph g);

// Reads out the full adjacency through the oracle: n(n-1)/2 queries when
// undirected, n(n-1) when directed.
Graph materialize(const CountedOracle& oracle);

// Counted bit-string oracle (graph-collision inputs).
class BitOracle {
  public:
    explicit BitOracle(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
    bool query(std::size_t i) const;
    std::size_t size() const { return bits_.size(); }
    std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }

  private:
    std::vector<std::uint8_t> bits_;
    mutable std::atomic<std::uint64_t> count_{0};
};

}  // namespace pclab
