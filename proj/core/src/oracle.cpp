#include "pclab/oracle.hpp"

#include <stdexcept>

namespace pclab {

bool CountedOracle::query(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("oracle: vertex out of range");
    if (u == v) throw std::invalid_argument("oracle: no self-loop queries in the model");
    count_.fetch_add(1, std::memory_order_relaxed);
    if (!directed_ && u > v) std::swap(u, v);  // symmetric answers, one canonical probe
    return query_impl(u, v);
}

std::shared_ptr<CountedOracle> oracle_for(Graph g) {
    return std::make_shared<GraphOracle>(std::move(g));
}

Graph materialize(const CountedOracle& oracle) {
    Graph g(oracle.n(), oracle.directed());
    for (int u = 0; u < oracle.n(); ++u)
        for (int v = oracle.directed() ? 0 : u + 1; v < oracle.n(); ++v)
            if (u != v && oracle.query(u, v)) g.add_edge(u, v);
    return g;
}

bool BitOracle::query(std::size_t i) const {
    if (i >= bits_.size()) throw std::invalid_argument("bit oracle: index out of range");
    count_.fetch_add(1, std::memory_order_relaxed);
    return bits_[i] != 0;
}

}  // namespace pclab
