#include "pclab/oracles.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace pclab {

namespace {

void guard(const Graph& g, const ProblemTag& tag) {
    if (g.n() > kOracleMaxVertices)
        throw std::invalid_argument("oracle: refusing exhaustive search beyond n = 32");
    if (tag.k > kOracleMaxLength)
        throw std::invalid_argument("oracle: refusing exhaustive search beyond k = 9");
}

bool step_ok(const Graph& g, int u, int v) {
    return g.directed() ? g.has_edge(u, v) : g.has_edge(u, v);
}

// simple path of exactly k edges; endpoints pinned when s/t >= 0
bool path_dfs(const Graph& g, int cur, int depth, int k, int t, std::uint32_t visited,
              std::vector<int>* out) {
    if (depth == k) {
        if (t >= 0 && cur != t) return false;
        return true;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (visited & (1u << w)) continue;
        if (!step_ok(g, cur, w)) continue;
        if (out) out->push_back(w);
        if (path_dfs(g, w, depth + 1, k, t, visited | (1u << w), out)) return true;
        if (out) out->pop_back();
    }
    return false;
}

bool exists_path_exact(const Graph& g, int k, int s, int t, std::vector<int>* out) {
    if (k + 1 > g.n()) return false;
    auto try_from = [&](int u) {
        if (out) {
            out->clear();
            out->push_back(u);
        }
        return path_dfs(g, u, 0, k, t, 1u << u, out);
    };
    if (s >= 0) return try_from(s);
    for (int u = 0; u < g.n(); ++u)
        if (try_from(u)) return true;
    return false;
}

// simple cycle of exactly k edges through root; when min_rule is set, all
// other cycle vertices must exceed root (canonical form for unrestricted
// enumeration)
bool cycle_dfs(const Graph& g, int root, int cur, int depth, int k, bool min_rule,
               std::uint32_t visited, std::vector<int>* out) {
    if (depth == k - 1) return step_ok(g, cur, root);
    for (int w = 0; w < g.n(); ++w) {
        if (w == root || (visited & (1u << w))) continue;
        if (min_rule && w < root) continue;
        if (!step_ok(g, cur, w)) continue;
        if (out) out->push_back(w);
        if (cycle_dfs(g, root, w, depth + 1, k, min_rule, visited | (1u << w), out)) return true;
        if (out) out->pop_back();
    }
    return false;
}

bool exists_cycle_exact(const Graph& g, int k, int s, std::vector<int>* out) {
    if (k > g.n() || k < 3) return false;
    auto try_root = [&](int root, bool min_rule) {
        if (out) {
            out->clear();
            out->push_back(root);
        }
        return cycle_dfs(g, root, root, 0, k, min_rule, 1u << root, out);
    };
    if (s >= 0) return try_root(s, false);
    for (int root = 0; root < g.n(); ++root)
        if (try_root(root, true)) return true;
    return false;
}

bool decide_exact(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned,
                  int k, std::vector<int>* out) {
    if (tag.family == Family::path) {
        int s = tag.pin_count == 2 ? pinned[0] : -1;
        int t = tag.pin_count == 2 ? pinned[1] : -1;
        return exists_path_exact(g, k, s, t, out);
    }
    int s = tag.pin_count == 1 ? pinned[0] : -1;
    return exists_cycle_exact(g, k, s, out);
}

std::vector<int> reach_set(const Graph& g, int s, bool forward) {
    std::vector<int> stack{s};
    std::vector<bool> seen(g.n(), false);
    seen[s] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.n(); ++w) {
            if (w == u || seen[w]) continue;
            bool edge = forward ? g.has_edge(u, w) : g.has_edge(w, u);
            if (edge) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

Graph without_vertex_edges(const Graph& g, int s) {
    Graph h = g;
    for (int w = 0; w < g.n(); ++w) {
        if (w == s) continue;
        if (g.directed()) {
            if (g.has_edge(s, w)) h.remove_edge(s, w);
            if (g.has_edge(w, s)) h.remove_edge(w, s);
        } else if (g.has_edge(s, w)) {
            h.remove_edge(s, w);
        }
    }
    return h;
}

}  // namespace

bool decide(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned) {
    validate_tag(tag);
    guard(g, tag);
    if (g.directed() != tag.directed)
        throw std::invalid_argument("oracle: graph direction does not match tag");
    if (static_cast<int>(pinned.size()) != tag.pin_count)
        throw std::invalid_argument("oracle: pinned arity mismatch");
    int lo = tag.mode == LenMode::exact ? tag.k : (tag.family == Family::path ? 1 : 3);
    for (int k = lo; k <= tag.k; ++k)
        if (decide_exact(g, tag, pinned, k, nullptr)) return true;
    return false;
}

bool decide(const ProblemInstance& instance) {
    return decide(materialize(*instance.oracle), instance.tag, instance.pinned);
}

Witness find(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned) {
    validate_tag(tag);
    guard(g, tag);
    if (static_cast<int>(pinned.size()) != tag.pin_count)
        throw std::invalid_argument("oracle: pinned arity mismatch");
    int lo = tag.mode == LenMode::exact ? tag.k : (tag.family == Family::path ? 1 : 3);
    std::vector<int> vertices;
    for (int k = lo; k <= tag.k; ++k) {
        if (decide_exact(g, tag, pinned, k, &vertices)) {
            Witness w;
            w.kind = tag.family == Family::path ? Witness::Kind::path : Witness::Kind::cycle;
            w.vertices = vertices;
            return w;
        }
    }
    return Witness{};
}

Witness find(const ProblemInstance& instance) {
    return find(materialize(*instance.oracle), instance.tag, instance.pinned);
}

bool check_witness(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned,
                   const Witness& w) {
    if (w.kind == Witness::Kind::none) return false;
    const auto& vs = w.vertices;
    for (int v : vs)
        if (v < 0 || v >= g.n()) return false;
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    auto edge_ok = [&](int u, int v) { return g.has_edge(u, v); };

    if (tag.family == Family::path) {
        if (w.kind != Witness::Kind::path) return false;
        int len = static_cast<int>(vs.size()) - 1;
        if (tag.mode == LenMode::exact ? len != tag.k : (len < 1 || len > tag.k)) return false;
        for (int i = 0; i + 1 < static_cast<int>(vs.size()); ++i)
            if (!edge_ok(vs[i], vs[i + 1])) return false;
        if (tag.pin_count == 2) {
            if (g.directed()) {
                if (vs.front() != pinned[0] || vs.back() != pinned[1]) return false;
            } else if (!((vs.front() == pinned[0] && vs.back() == pinned[1]) ||
                         (vs.front() == pinned[1] && vs.back() == pinned[0]))) {
                return false;
            }
        }
        return true;
    }

    if (w.kind != Witness::Kind::cycle) return false;
    int len = static_cast<int>(vs.size());
    if (tag.mode == LenMode::exact ? len != tag.k : (len < 3 || len > tag.k)) return false;
    if (len < 3) return false;
    for (int i = 0; i < len; ++i)
        if (!edge_ok(vs[i], vs[(i + 1) % len])) return false;
    if (tag.pin_count == 1 && std::find(vs.begin(), vs.end(), pinned[0]) == vs.end())
        return false;
    return true;
}

bool connected(const Graph& g, int s, int t) {
    auto r = reach_set(g, s, true);
    return std::find(r.begin(), r.end(), t) != r.end();
}

bool reachable(const Graph& g, int s, int t) { return connected(g, s, t); }

bool has_any_cycle_through(const Graph& g, int s) {
    // a simple cycle of length >= 3 through s exists iff two distinct
    // s-neighbours (out/in in the directed case) are joined in G - s
    Graph h = without_vertex_edges(g, s);
    if (g.directed()) {
        for (int w = 0; w < g.n(); ++w) {
            if (w == s || !g.has_edge(s, w)) continue;
            auto r = reach_set(h, w, true);
            for (int u : r)
                if (u != s && u != w && g.has_edge(u, s)) return true;
        }
        return false;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (w == s || !g.has_edge(s, w)) continue;
        auto r = reach_set(h, w, true);
        for (int u : r)
            if (u != s && u != w && g.has_edge(u, s)) return true;
    }
    return false;
}

bool has_any_cycle(const Graph& g) {
    if (!g.directed()) {
        // not a forest
        std::vector<int> parent(g.n());
        for (int i = 0; i < g.n(); ++i) parent[i] = i;
        auto root = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : g.edges()) {
            int ru = root(u), rv = root(v);
            if (ru == rv) return true;
            parent[ru] = rv;
        }
        return false;
    }
    for (int s = 0; s < g.n(); ++s)
        if (has_any_cycle_through(g, s)) return true;
    return false;
}

bool promise_holds(const Graph& g, const ProblemTag& tag, const std::vector<int>& pinned) {
    validate_tag(tag);
    if (!tag.promise) throw std::invalid_argument("promise_holds: tag carries no promise");
    if (g.n() > kOracleMaxVertices)
        throw std::invalid_argument("oracle: refusing exhaustive search beyond n = 32");
    ProblemTag plain = tag;
    plain.promise = false;
    if (tag.family == Family::path) {
        if (!reachable(g, pinned[0], pinned[1])) return true;
        return decide(g, plain, pinned);
    }
    bool any = tag.pin_count == 1 ? has_any_cycle_through(g, pinned[0]) : has_any_cycle(g);
    if (!any) return true;
    return decide(g, plain, pinned);
}

bool promise_holds(const ProblemInstance& instance) {
    return promise_holds(materialize(*instance.oracle), instance.tag, instance.pinned);
}

std::string witness_to_json(const Witness& w) {
    nlohmann::json j;
    switch (w.kind) {
        case Witness::Kind::none: j["kind"] = "none"; break;
        case Witness::Kind::path: j["kind"] = "path"; break;
        case Witness::Kind::cycle: j["kind"] = "cycle"; break;
    }
    j["vertices"] = w.vertices;
    return j.dump();
}

GCInstance make_gc_instance(Graph g, std::vector<std::uint8_t> bits) {
    if (g.directed()) throw std::invalid_argument("graph collision: undirected graphs only");
    if (static_cast<int>(bits.size()) != g.n())
        throw std::invalid_argument("graph collision: |x| must equal n");
    return GCInstance{std::move(g), std::make_shared<BitOracle>(std::move(bits))};
}

bool graph_collision(const GCInstance& instance) {
    for (auto [v, w] : instance.g.edges())
        if (instance.x->query(v) && instance.x->query(w)) return true;
    return false;
}

BitMatrixOracle::BitMatrixOracle(std::vector<std::vector<std::uint8_t>> rows)
    : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != rows_.size())
            throw std::invalid_argument("bit matrix: need n strings of n bits");
}

bool BitMatrixOracle::query(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= rows_.size())
        throw std::invalid_argument("bit matrix: index out of range");
    count_.fetch_add(1, std::memory_order_relaxed);
    return rows_[i][j] != 0;
}

GcOrInstance make_gc_or_instance(Graph g, std::vector<std::vector<std::uint8_t>> strings) {
    if (g.directed()) throw std::invalid_argument("gc_or: undirected graphs only");
    if (static_cast<int>(strings.size()) != g.n())
        throw std::invalid_argument("gc_or: need one string per vertex");
    return GcOrInstance{std::move(g), std::make_shared<BitMatrixOracle>(std::move(strings))};
}

bool gc_or(const GcOrInstance& instance) {
    int n = instance.g.n();
    std::vector<std::uint8_t> y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (instance.xs->query(i, j)) {
                y[i] = 1;
                break;
            }
    for (auto [v, w] : instance.g.edges())
        if (y[v] && y[w]) return true;
    return false;
}

}  // namespace pclab
