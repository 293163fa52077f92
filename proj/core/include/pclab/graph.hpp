#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pclab {

// Simple graph over vertices 0..n-1, dense bit-matrix adjacency.
// Undirected graphs keep the matrix symmetric; no self-loops ever.
// In the directed case both opposite arcs may coexist.
class Graph {
  public:
    Graph() = default;
    Graph(int n, bool directed);

    int n() const { return n_; }
    bool directed() const { return directed_; }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return bits_[static_cast<std::size_t>(u) * n_ + v];
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int edge_count() const;  // unordered pairs when undirected, arcs otherwise
    std::vector<std::pair<int, int>> edges() const;  // sorted, u<v when undirected
    std::vector<int> neighbors(int v) const;          // undirected
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;

    bool operator==(const Graph& other) const = default;

  private:
    void check_pair(int u, int v) const;
    int n_ = 0;
    bool directed_ = false;
    std::vector<bool> bits_;
};

// Edge endpoints must be in range and distinct; undirected input is
// symmetrized. Throws std::invalid_argument otherwise.
Graph make_graph(int n, bool directed, const std::vector<std::pair<int, int>>& edges);

// Plain-text edge list: first line "<n> directed|undirected", then one
// "u v" line per edge (arcs as given; undirected edges with u < v, sorted).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

// JSON mirror of the same data: {"n":..,"directed":..,"edges":[[u,v],..]}.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace pclab
