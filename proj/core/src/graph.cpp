#include "pclab/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pclab {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    bits_.assign(static_cast<std::size_t>(n) * n, false);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("graph: vertex out of range");
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * n_ + v] = true;
    if (!directed_) bits_[static_cast<std::size_t>(v) * n_ + u] = true;
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * n_ + v] = false;
    if (!directed_) bits_[static_cast<std::size_t>(v) * n_ + u] = false;
}

int Graph::edge_count() const {
    int total = 0;
    for (bool b : bits_) total += b ? 1 : 0;
    return directed_ ? total : total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = directed_ ? 0 : u + 1; v < n_; ++v)
            if (u != v && bits_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const { return out_neighbors(v); }

std::vector<int> Graph::out_neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (w != v && bits_[static_cast<std::size_t>(v) * n_ + w]) out.push_back(w);
    return out;
}

std::vector<int> Graph::in_neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (w != v && bits_[static_cast<std::size_t>(w) * n_ + v]) out.push_back(w);
    return out;
}

Graph make_graph(int n, bool directed, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n, directed);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    int n = -1;
    std::string kind;
    if (!(is >> n >> kind)) throw std::invalid_argument("edge list: bad header");
    bool directed;
    if (kind == "directed")
        directed = true;
    else if (kind == "undirected")
        directed = false;
    else
        throw std::invalid_argument("edge list: expected 'directed' or 'undirected'");
    Graph g(n, directed);
    int u, v;
    while (is >> u >> v) g.add_edge(u, v);
    if (!is.eof() && is.fail()) throw std::invalid_argument("edge list: bad edge line");
    return g;
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["directed"] = g.directed();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Graph g(j.at("n").get<int>(), j.at("directed").get<bool>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

}  // namespace pclab
