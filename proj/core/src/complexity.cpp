#include "pclab/complexity.hpp"

#include "pclab/piecewise.hpp"
#include "pclab/reductions.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pclab {

std::pair<Rational, Rational> solve_xy(int k) {
    if (k < 2) throw std::invalid_argument("solve_xy: defined for k >= 2");
    Rational x = k % 2 == 0 ? Rational(1, 2) : Rational(2, 3);
    Rational y(1, 2);
    for (int i = 2 + (k % 2); i < k; i += 2) {
        Rational nx = (1 + x) / (2 - y);
        Rational ny = (1 - y) / (2 * (2 - y));
        x = nx;
        y = ny;
    }
    return {x, y};
}

std::vector<RecurrenceRow> xy_table(int k_max) {
    std::vector<RecurrenceRow> rows;
    for (int k = 2; k <= k_max; ++k) {
        auto [x, y] = solve_xy(k);
        rows.push_back({k, x, y, x + y});
    }
    return rows;
}

Rational dirpath_exponent(int k) {
    if (k < 1) throw std::invalid_argument("dirpath_exponent: k >= 1");
    if (k == 1) return Rational(1);
    auto [x, y] = solve_xy(k);
    return x + y;
}

Rational alpha(int k, const Rational& a_r) {
    if (k < 3) throw std::invalid_argument("alpha: k >= 3");
    if (a_r < 0 || a_r > 1) throw std::invalid_argument("alpha: a_r must be in [0,1]");
    auto [x, y] = solve_xy(k);
    Rational prev = k == 3 ? Rational(1) : dirpath_exponent(k - 2);
    return std::max(prev, Rational(x + y * a_r));
}

namespace {

// alpha_{k,s} as an exact piecewise-linear function of a_s on [0,1]
const PiecewiseLinear& alpha_function(int k) {
    static std::map<int, PiecewiseLinear> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    PiecewiseLinear result = [&]() -> PiecewiseLinear {
        if (k == 1) return PiecewiseLinear::affine(Rational(1), Rational(0));
        if (k == 2) return PiecewiseLinear::affine(Rational(1, 2), Rational(1, 2));
        const PiecewiseLinear& inner = alpha_function(k - 2);
        // h(s) = 1 - s + alpha_{k-2,s};  u(s) = max(s, 1 - s/2)
        PiecewiseLinear h = inner.plus_affine(Rational(-1), Rational(1));
        PiecewiseLinear u = pointwise_max(PiecewiseLinear::affine(Rational(1), Rational(0)),
                                          PiecewiseLinear::affine(Rational(-1, 2), Rational(1)));
        // the shift is a_r/2; re-parameterising [0,1/2] by t recovers a_r = t
        return parametric_min_max(u, h, Rational(0), Rational(1, 2));
    }();
    auto [pos, inserted] = cache.emplace(k, std::move(result));
    (void)inserted;
    return pos->second;
}

}  // namespace

Rational alpha_min_direct(int k, const Rational& a_r) {
    if (k < 1) throw std::invalid_argument("alpha_min_direct: k >= 1");
    if (a_r < 0 || a_r > 1)
        throw std::invalid_argument("alpha_min_direct: a_r must be in [0,1]");
    return alpha_function(k)(a_r);
}

LimitConstants limit_constants() {
    double s17 = std::sqrt(17.0);
    LimitConstants lc;
    lc.chi = (13.0 + 3.0 * s17) / 4.0;
    lc.phi = (5.0 - s17) / 4.0;
    lc.alpha_limit = 1.0 / (1.0 - lc.phi);
    lc.c = std::min(std::sqrt(lc.chi), std::sqrt(2.0 - lc.phi));
    return lc;
}

double y_even_closed_form(int l) {
    if (l < 1) throw std::invalid_argument("y_even_closed_form: l >= 1");
    auto lc = limit_constants();
    double s17 = std::sqrt(17.0);
    double chi_pow = std::pow(-lc.chi, l);
    return s17 / (2.0 * (1.0 - chi_pow)) + lc.phi;
}

Rational gamma_k(int k) {
    if (k < 4) throw std::invalid_argument("gamma: k >= 4");
    if (k % 2 == 0) return Rational(k - 2, static_cast<long long>(k) * (k + 2));
    return Rational(k - 3, static_cast<long long>(k - 1) * (k + 1));
}

Rational cycle_leq_exponent(int k) { return Rational(3, 2) - gamma_k(k); }

Rational lms_t_term(int k, int m, int d) {
    if (k < 3 || m < 1 || d < 1)
        throw std::invalid_argument("lms_exponent: need k >= 3, m >= 1, d >= 1");
    Rational first(static_cast<long long>(k) * k - 2 * (m + 1),
                   static_cast<long long>(k) * (k + 1) * (m + 1));
    Rational second(2 * k - d - 3,
                    static_cast<long long>(k) * (d + 1) * (m - d + 2));
    return std::max(first, second);
}

Rational lms_exponent(int k, int m, int d) {
    return Rational(2) - Rational(2, k) - lms_t_term(k, m, d);
}

// --- equivalence classes ------------------------------------------------------

namespace {

struct SccState {
    std::vector<std::vector<int>> adj;
    std::vector<int> index, low, comp;
    std::vector<int> stack;
    std::vector<bool> on_stack;
    int counter = 0, comp_count = 0;

    void dfs(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    }
};

}  // namespace

std::vector<std::vector<std::string>> equivalence_classes(int k) {
    auto nodes = problem_web_nodes(k);
    auto edges = problem_relations(k);
    bool odd = k % 2 != 0;

    int anchor = static_cast<int>(nodes.size());  // virtual Theta(n) node
    auto node_id = [&nodes](const ProblemTag& t) {
        auto it = std::find(nodes.begin(), nodes.end(), t);
        if (it == nodes.end()) throw std::logic_error("classes: edge endpoint outside web");
        return static_cast<int>(it - nodes.begin());
    };

    SccState scc;
    scc.adj.assign(nodes.size() + 1, {});
    for (const auto& e : edges) {
        if (e.odd_k_only && !odd) continue;
        scc.adj[static_cast<std::size_t>(node_id(e.src))].push_back(node_id(e.dst));
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (has_external_linear_algorithm(nodes[i])) {
            scc.adj[i].push_back(anchor);
            scc.adj[static_cast<std::size_t>(anchor)].push_back(static_cast<int>(i));
        }
    }

    int n = static_cast<int>(nodes.size()) + 1;
    scc.index.assign(n, -1);
    scc.low.assign(n, 0);
    scc.comp.assign(n, -1);
    scc.on_stack.assign(n, false);
    for (int v = 0; v < n; ++v)
        if (scc.index[v] < 0) scc.dfs(v);

    std::map<int, std::vector<std::string>> grouped;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        grouped[scc.comp[i]].push_back(to_string(nodes[i]));
    std::vector<std::vector<std::string>> classes;
    for (auto& [id, members] : grouped) {
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return classes;
}

std::string classes_to_json(int k) {
    nlohmann::json j;
    j["k"] = k;
    j["classes"] = equivalence_classes(k);
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& t : problem_web_nodes(k))
        if (has_external_linear_algorithm(t)) axioms.push_back(to_string(t));
    j["linear_query_axioms"] = std::move(axioms);
    // the finding and promise-finding variants collapse onto the detection
    // problem of the same tag, so each class implicitly covers them
    j["covers_find_variants"] = true;
    return j.dump(2);
}

}  // namespace pclab
