#include "pclab/walkcheck.hpp"

#include "pclab/tape.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pclab {

double mnrs_cost(const WalkCostModel& m) {
    if (m.marked_fraction <= 0 || m.spectral_gap <= 0)
        throw std::invalid_argument("mnrs_cost: gap and marked fraction must be positive");
    if (m.setup < 0 || m.update < 0 || m.check < 0)
        throw std::invalid_argument("mnrs_cost: costs must be non-negative");
    return m.setup +
           (1.0 / std::sqrt(m.marked_fraction)) *
               (m.update / std::sqrt(m.spectral_gap) + m.check);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s);
    std::iota(cur.begin(), cur.end(), 0);
    if (s == 0) return {{}};
    for (;;) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[i] == n - s + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0, j = 0, count = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

Eigen::MatrixXd walk_operator(const Graph& g, int degree) {
    int m = g.n();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    for (auto [u, v] : g.edges()) {
        p(u, v) = 1.0 / degree;
        p(v, u) = 1.0 / degree;
    }
    return p;
}

}  // namespace

Graph johnson_graph(int n, int s) {
    if (s < 1 || 2 * s > n) throw std::invalid_argument("johnson_graph: need 1 <= s <= n/2");
    auto subsets = subsets_of_size(n, s);
    Graph g(static_cast<int>(subsets.size()), false);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (intersection_size(subsets[i], subsets[j]) == s - 1)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

double johnson_gap_formula(int n, int s) {
    return static_cast<double>(n) / (static_cast<double>(s) * (n - s));
}

double johnson_gap_computed(int n, int s) {
    if (n > 12) throw std::invalid_argument("johnson_gap: dense eigensolve capped at n = 12");
    Graph g = johnson_graph(n, s);
    int degree = s * (n - s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(walk_operator(g, degree));
    const auto& evals = solver.eigenvalues();  // ascending
    return 1.0 - evals(evals.size() - 2);
}

double johnson_product_gap_computed(int n1, int s1, int n2, int s2) {
    Graph g1 = johnson_graph(n1, s1);
    Graph g2 = johnson_graph(n2, s2);
    Eigen::MatrixXd p1 = walk_operator(g1, s1 * (n1 - s1));
    Eigen::MatrixXd p2 = walk_operator(g2, s2 * (n2 - s2));
    int m1 = g1.n(), m2 = g2.n();
    if (static_cast<long long>(m1) * m2 > 4000)
        throw std::invalid_argument("johnson_product_gap: product too large for a dense solve");
    Eigen::MatrixXd l1 = Eigen::MatrixXd::Identity(m1, m1) - p1;
    Eigen::MatrixXd l2 = Eigen::MatrixXd::Identity(m2, m2) - p2;
    // walk Laplacian of the Cartesian product: L1 (+) L2 via Kronecker sums
    Eigen::MatrixXd lp = Eigen::MatrixXd::Zero(m1 * m2, m1 * m2);
    for (int a = 0; a < m1; ++a)
        for (int b = 0; b < m1; ++b)
            for (int c = 0; c < m2; ++c)
                for (int d = 0; d < m2; ++d) {
                    double value = 0;
                    if (c == d) value += l1(a, b);
                    if (a == b) value += l2(c, d);
                    if (value != 0) lp(a * m2 + c, b * m2 + d) = value;
                }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lp);
    const auto& evals = solver.eigenvalues();
    for (int i = 0; i < evals.size(); ++i)
        if (evals(i) > 1e-9) return evals(i);
    throw std::logic_error("johnson_product_gap: no nonzero eigenvalue found");
}

Rational marked_fraction(int layer_size, int s, bool planted) {
    if (s < 1 || s > layer_size) throw std::invalid_argument("marked_fraction: bad subset size");
    if (!planted) return Rational(0);
    Rational per_layer(binomial(static_cast<unsigned>(layer_size - 1), static_cast<unsigned>(s - 1)),
                       binomial(static_cast<unsigned>(layer_size), static_cast<unsigned>(s)));
    return per_layer * per_layer;
}

// --- layered instances ---------------------------------------------------------

LayeredInstance make_layered_instance(const Graph& g, const std::vector<int>& layers, int k) {
    if (!g.directed()) throw std::invalid_argument("layered instance: directed graphs only");
    if (static_cast<int>(layers.size()) != g.n())
        throw std::invalid_argument("layered instance: one layer per vertex");
    Graph filtered(g.n(), true);
    for (auto [u, v] : g.edges())
        if (layers[u] >= 0 && layers[v] == layers[u] + 1) filtered.add_edge(u, v);
    LayeredInstance inst;
    inst.g = std::move(filtered);
    inst.layer = layers;
    inst.k = k;
    int r0 = 0, rk = 0;
    for (int v = 0; v < g.n(); ++v) {
        r0 += layers[v] == 0 ? 1 : 0;
        rk += layers[v] == k ? 1 : 0;
    }
    inst.r = std::min(r0, rk);
    return inst;
}

std::vector<int> balanced_layer_sizes(int n, int k) {
    std::vector<int> sizes(static_cast<std::size_t>(k) + 1, n / (k + 1));
    for (int i = 0; i < n % (k + 1); ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

LayeredInstance random_layered_instance(int n, int k, int r, bool plant, double arc_density,
                                        std::uint64_t seed) {
    if (k < 1 || n < k + 1) throw std::invalid_argument("layered instance: need n >= k+1");
    std::vector<int> sizes = balanced_layer_sizes(n - 2 * r, k - 2 >= 0 ? k - 2 : 0);
    // layers: 0 and k of size r, middle layers balanced
    std::vector<int> layer(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        int size = (j == 0 || j == k) ? r : sizes[static_cast<std::size_t>(j - 1)];
        for (int i = 0; i < size && next < n; ++i) {
            layer[static_cast<std::size_t>(next)] = j;
            members[static_cast<std::size_t>(j)].push_back(next);
            ++next;
        }
    }
    while (next < n) {  // leftovers join the middle
        int j = std::max(1, k / 2);
        layer[static_cast<std::size_t>(next)] = j;
        members[static_cast<std::size_t>(j)].push_back(next);
        ++next;
    }
    for (int j = 0; j <= k; ++j)
        if (members[static_cast<std::size_t>(j)].empty())
            throw std::invalid_argument("layered instance: a layer came out empty");

    Graph g(n, true);
    std::uint64_t state = seed;
    for (int j = 0; j < k; ++j)
        for (int u : members[static_cast<std::size_t>(j)])
            for (int v : members[static_cast<std::size_t>(j + 1)]) {
                double roll =
                    static_cast<double>(splitmix64(state) >> 11) / 9007199254740992.0;
                if (roll < arc_density) g.add_edge(u, v);
            }
    if (plant) {
        for (int j = 0; j < k; ++j) {
            const auto& from = members[static_cast<std::size_t>(j)];
            const auto& to = members[static_cast<std::size_t>(j + 1)];
            int u = from[static_cast<std::size_t>(splitmix64(state) % from.size())];
            int v = to[static_cast<std::size_t>(splitmix64(state) % to.size())];
            g.add_edge(u, v);
        }
    }
    return make_layered_instance(g, layer, k);
}

// --- layered path search ---------------------------------------------------------

namespace {

struct LayerView {
    const Graph* g;
    std::vector<std::vector<int>> members;  // by level 0..k_local
};

bool arc(const Graph& g, int u, int v) { return g.has_edge(u, v); }

// any arc from the set into v
bool reachable_from(const Graph& g, const std::vector<int>& from, int v) {
    for (int u : from)
        if (arc(g, u, v)) return true;
    return false;
}

bool reaches_into(const Graph& g, int v, const std::vector<int>& to) {
    for (int w : to)
        if (arc(g, v, w)) return true;
    return false;
}

std::vector<int> search_rec(const Graph& g, const std::vector<std::vector<int>>& levels,
                            const std::vector<int>& schedule, std::size_t depth,
                            std::uint64_t& state);

// exhaustive solve once the boundary sets are fixed
std::vector<int> solve_fixed(const Graph& g, std::vector<std::vector<int>> levels,
                             const std::vector<int>& schedule, std::size_t depth,
                             std::uint64_t& state) {
    int k_local = static_cast<int>(levels.size()) - 1;
    if (k_local == 1) {
        for (int u : levels[0])
            for (int v : levels[1])
                if (arc(g, u, v)) return {u, v};
        return {};
    }
    if (k_local == 2) {
        for (int m : levels[1]) {
            int from = -1, to = -1;
            for (int u : levels[0])
                if (arc(g, u, m)) {
                    from = u;
                    break;
                }
            if (from < 0) continue;
            for (int w : levels[2])
                if (arc(g, m, w)) {
                    to = w;
                    break;
                }
            if (to >= 0) return {from, m, to};
        }
        return {};
    }
    // flags relative to the outer boundary layers
    std::vector<int> flagged_first, flagged_last;
    for (int v : levels[1])
        if (reachable_from(g, levels[0], v)) flagged_first.push_back(v);
    for (int v : levels[static_cast<std::size_t>(k_local) - 1])
        if (reaches_into(g, v, levels[static_cast<std::size_t>(k_local)]))
            flagged_last.push_back(v);
    if (flagged_first.empty() || flagged_last.empty()) return {};
    std::vector<std::vector<int>> inner(levels.begin() + 1, levels.end() - 1);
    inner.front() = flagged_first;
    inner.back() = flagged_last;
    auto sub = search_rec(g, inner, schedule, depth + 1, state);
    if (sub.empty()) return {};
    int u0 = -1, wk = -1;
    for (int u : levels[0])
        if (arc(g, u, sub.front())) {
            u0 = u;
            break;
        }
    for (int w : levels[static_cast<std::size_t>(k_local)])
        if (arc(g, sub.back(), w)) {
            wk = w;
            break;
        }
    if (u0 < 0 || wk < 0) return {};  // cannot happen: flags certify both ends
    std::vector<int> path{u0};
    path.insert(path.end(), sub.begin(), sub.end());
    path.push_back(wk);
    return path;
}

std::vector<int> search_rec(const Graph& g, const std::vector<std::vector<int>>& levels,
                            const std::vector<int>& schedule, std::size_t depth,
                            std::uint64_t& state) {
    int k_local = static_cast<int>(levels.size()) - 1;
    if (k_local <= 2) return solve_fixed(g, levels, schedule, depth, state);

    const auto& first = levels[1];
    const auto& last = levels[static_cast<std::size_t>(k_local) - 1];
    int s = depth < schedule.size() ? schedule[depth] : 1;
    s = std::max(1, std::min({s, static_cast<int>(first.size()) / 2,
                              static_cast<int>(last.size()) / 2}));
    if (s >= 1 && static_cast<int>(first.size()) > s &&
        static_cast<int>(last.size()) > s) {
        // walk phase over subset pairs (Johnson-walk style resampling)
        std::vector<int> w1(first.begin(), first.begin() + s);
        std::vector<int> w2(last.begin(), last.begin() + s);
        int steps = 2 * (static_cast<int>(first.size()) + static_cast<int>(last.size()));
        for (int step = 0; step < steps; ++step) {
            std::vector<int> f1, f2;
            for (int v : w1)
                if (reachable_from(g, levels[0], v)) f1.push_back(v);
            for (int v : w2)
                if (reaches_into(g, v, levels[static_cast<std::size_t>(k_local)]))
                    f2.push_back(v);
            if (!f1.empty() && !f2.empty()) {
                std::vector<std::vector<int>> inner(levels.begin() + 1, levels.end() - 1);
                inner.front() = f1;
                inner.back() = f2;
                auto sub = search_rec(g, inner, schedule, depth + 1, state);
                if (!sub.empty()) {
                    for (int u : levels[0])
                        if (arc(g, u, sub.front()))
                            for (int w : levels[static_cast<std::size_t>(k_local)])
                                if (arc(g, sub.back(), w)) {
                                    std::vector<int> path{u};
                                    path.insert(path.end(), sub.begin(), sub.end());
                                    path.push_back(w);
                                    return path;
                                }
                }
            }
            // swap one element per boundary set, as the product walk does
            auto resample = [&state](std::vector<int>& w, const std::vector<int>& pool) {
                std::size_t out = splitmix64(state) % w.size();
                for (int tries = 0; tries < 8; ++tries) {
                    int candidate =
                        pool[static_cast<std::size_t>(splitmix64(state) % pool.size())];
                    if (std::find(w.begin(), w.end(), candidate) == w.end()) {
                        w[out] = candidate;
                        return;
                    }
                }
            };
            resample(w1, first);
            resample(w2, last);
        }
    }
    // completion pass: never truncate to a probabilistic answer
    return solve_fixed(g, levels, schedule, depth, state);
}

}  // namespace

Witness layered_path_search(const LayeredInstance& inst, const std::vector<int>& schedule,
                            std::uint64_t seed) {
    int expected = inst.k >= 3 ? (inst.k - 1) / 2 : 0;
    if (static_cast<int>(schedule.size()) != expected)
        throw std::invalid_argument("layered_path_search: schedule length must be floor((k-1)/2)");
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(inst.k) + 1);
    for (int v = 0; v < inst.g.n(); ++v) {
        int l = inst.layer[static_cast<std::size_t>(v)];
        if (l >= 0 && l <= inst.k) levels[static_cast<std::size_t>(l)].push_back(v);
    }
    for (const auto& level : levels)
        if (level.empty()) return Witness{};
    std::uint64_t state = seed;
    auto path = search_rec(inst.g, levels, schedule, 0, state);
    if (path.empty()) return Witness{};
    Witness w;
    w.kind = Witness::Kind::path;
    w.vertices = path;
    return w;
}

// --- cycle detection with the density stage -----------------------------------

bool approx_edge_count(const CountedOracle& oracle, double threshold, EdgeCounterMode mode,
                       std::uint64_t seed) {
    int n = oracle.n();
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (mode == EdgeCounterMode::exact) {
        long long count = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (oracle.query(u, v)) ++count;
        return static_cast<double>(count) >= 1.5 * threshold;
    }
    // Bernoulli sampling; failure probability <= 1/n by a Chernoff bound
    double ratio = static_cast<double>(pairs) / threshold;
    long long samples =
        std::max<long long>(8, static_cast<long long>(std::ceil(12.0 * (ratio + 1.0) *
                                                                std::log(2.0 * n + 2.0))));
    std::uint64_t state = seed;
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        int u = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
        if (u == v) {
            --i;
            continue;
        }
        if (oracle.query(u, v)) ++hits;
    }
    double estimate = static_cast<double>(hits) / static_cast<double>(samples) *
                      static_cast<double>(pairs);
    return estimate >= 1.5 * threshold;
}

CycleRunStats cycle_leq_k(const ProblemInstance& instance, int k, EdgeCounterMode mode,
                          std::uint64_t seed) {
    if (k < 4) throw std::invalid_argument("cycle_leq_k: defined for k >= 4");
    if (instance.tag.directed || instance.tag.pin_count != 0)
        throw std::invalid_argument("cycle_leq_k: undirected unrestricted instances only");
    const auto& oracle = *instance.oracle;
    int n = oracle.n();
    int ell = k / 2;
    double mbar = 100.0 * ell * std::pow(static_cast<double>(n), 1.0 + 1.0 / ell);

    CycleRunStats stats;
    stats.density_threshold = mbar;
    std::uint64_t before = oracle.query_count();

    if (approx_edge_count(oracle, mbar, mode, seed)) {
        // dense enough that an even cycle of length 2*ell <= k must exist
        stats.verdict = true;
        stats.density_fired = true;
        stats.queries = oracle.query_count() - before;
        return stats;
    }

    Graph g = materialize(oracle);
    for (int j = 3; j <= k && !stats.verdict; ++j) {
        ProblemTag tag;
        tag.family = Family::cycle;
        tag.mode = LenMode::exact;
        tag.k = j;
        stats.verdict = decide(g, tag, {});
    }
    stats.queries = oracle.query_count() - before;
    return stats;
}

// --- sparse walk parameters -----------------------------------------------------

SparseWalkModel sparse_walk_params(int n, double mbar, int ell,
                                   const std::vector<double>& t_values) {
    if (ell < 1) throw std::invalid_argument("sparse_walk_params: ell >= 1");
    if (static_cast<int>(t_values.size()) != ell)
        throw std::invalid_argument("sparse_walk_params: one t value per block");
    double floor_m = std::pow(static_cast<double>(n), 1.0 + 1.0 / (ell + 1));
    if (mbar < floor_m)
        throw std::invalid_argument("sparse_walk_params: mbar below n^{1+1/(ell+1)}");
    for (double t : t_values) {
        if (t <= 0) throw std::invalid_argument("sparse_walk_params: t values must be positive");
        if (t > n) throw std::invalid_argument("sparse_walk_params: a degree block holds <= n vertices");
    }

    SparseWalkModel model;
    model.ell = ell;
    model.n = n;
    model.mbar = mbar;
    double t1 = t_values[0];
    double r1 = std::sqrt(t1) * std::pow(static_cast<double>(n), 0.5 - 1.0 / (ell + 1));
    double setup = 0, update = 0;
    double eps = 1, delta = 1e300;
    for (int i = 0; i < ell; ++i) {
        SparseWalkBlock block;
        block.t = t_values[static_cast<std::size_t>(i)];
        block.q = mbar / block.t;  // degree scale consistent with t_i = mbar / q_i
        double ratio = std::sqrt(block.t / t1);
        block.r = r1 * ratio;
        block.s = ratio;  // s_1 = 1
        double per_vertex = std::sqrt(static_cast<double>(n) * mbar / block.t);
        setup += block.r * per_vertex;
        update += block.s * per_vertex;
        eps *= block.r / block.t;
        delta = std::min(delta, block.s / block.r);
        model.blocks.push_back(block);
    }
    model.cost.setup = setup;
    model.cost.update = update;
    model.cost.check = n;
    model.cost.spectral_gap = delta;
    model.cost.marked_fraction = eps;

    double target = std::sqrt(mbar) * std::pow(static_cast<double>(n), 1.0 - 1.0 / (ell + 1));
    double slack = 1.0 + 1e-9;
    if (setup > ell * target * slack)
        throw std::logic_error("sparse_walk_params: setup chain violated");
    double product_term = (1.0 / std::sqrt(eps)) * (update / std::sqrt(delta));
    if (product_term > ell * target * slack)
        throw std::logic_error("sparse_walk_params: update chain violated");
    if (update / std::sqrt(delta) < static_cast<double>(n) / slack)
        throw std::logic_error("sparse_walk_params: checking cost not dominated");
    return model;
}

}  // namespace pclab
