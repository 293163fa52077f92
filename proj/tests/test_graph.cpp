#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pclab/graph.hpp"
#include "pclab/oracle.hpp"
#include "pclab/oracles.hpp"
#include "pclab/tape.hpp"

#include <cmath>
#include <set>

using namespace pclab;

TEST_CASE("make_graph basics") {
    // path graph on three vertices
    Graph p = make_graph(3, false, {{0, 1}, {1, 2}});
    CHECK(p.has_edge(0, 1));
    CHECK(p.has_edge(1, 0));  // symmetrized
    CHECK_FALSE(p.has_edge(0, 2));
    CHECK(p.edge_count() == 2);

    Graph lone = make_graph(1, true, {});
    CHECK(lone.n() == 1);
    CHECK(lone.edge_count() == 0);

    CHECK_THROWS_AS(make_graph(3, false, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, false, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("a directed 5-cycle satisfies the cycle oracle") {
    Graph c5 = make_graph(5, true, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    ProblemTag tag = parse_tag("DirCycle=5");
    CHECK(decide(c5, tag, {}));
    ProblemTag shorter = parse_tag("DirCycle=4");
    CHECK_FALSE(decide(c5, shorter, {}));
}

TEST_CASE("edge queries count and stay symmetric") {
    Graph p = make_graph(3, false, {{0, 1}, {1, 2}});
    auto oracle = oracle_for(p);
    CHECK(oracle->query(0, 1));
    CHECK(oracle->query_count() == 1);
    CHECK(oracle->query(1, 0) == oracle->query(0, 1));
    CHECK(oracle->query_count() == 3);

    Graph empty(4, false);
    auto eo = oracle_for(empty);
    CHECK_FALSE(eo->query(2, 3));
    CHECK_THROWS_AS(eo->query(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(eo->query(0, 7), std::invalid_argument);
}

TEST_CASE("materializing costs exactly the pair count") {
    Graph g = make_graph(5, false, {{0, 1}, {2, 3}});
    auto oracle = oracle_for(g);
    Graph copy = materialize(*oracle);
    CHECK(copy == g);
    CHECK(oracle->query_count() == 5 * 4 / 2);

    Graph d = make_graph(4, true, {{0, 1}, {1, 0}, {2, 3}});
    auto od = oracle_for(d);
    CHECK(materialize(*od) == d);
    CHECK(od->query_count() == 4 * 3);
}

TEST_CASE("derived views cascade counts to their base") {
    Graph k4 = make_graph(4, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto base = oracle_for(k4);
    auto even_only = std::make_shared<LazyViewOracle>(
        4, false, base, [](const CountedOracle& b, int u, int v) {
            return (u + v) % 2 == 0 && b.query(u, v);
        });
    CHECK(even_only->query(0, 2));
    CHECK(even_only->query_count() == 1);
    CHECK(base->query_count() == 1);
    CHECK_FALSE(even_only->query(0, 1));  // parity filter, no base probe
    CHECK(even_only->query_count() == 2);
    CHECK(base->query_count() == 1);
}

TEST_CASE("serialization round-trips bit-exactly") {
    Graph g = make_graph(5, true, {{0, 1}, {3, 2}, {4, 0}});
    std::string text = to_edge_list(g);
    CHECK(from_edge_list(text) == g);
    CHECK(to_edge_list(from_edge_list(text)) == text);

    std::string js = to_json(g);
    CHECK(graph_from_json(js) == g);
    CHECK(to_json(graph_from_json(js)) == js);

    CHECK_THROWS_AS(from_edge_list("3 sideways\n"), std::invalid_argument);
}

TEST_CASE("tapes replay deterministically") {
    TapeParams params;
    params.n = 4;
    params.color_lo = 1;
    params.color_hi = 2;
    params.pinned_colors = {{1, 0}};
    ColoringTape a = fresh_tape(0, params);
    ColoringTape b = fresh_tape(0, params);
    CHECK(a.colors == b.colors);
    CHECK(a.colors[1] == 0);
    for (int v : {0, 2, 3}) {
        CHECK(a.colors[v] >= 1);
        CHECK(a.colors[v] <= 2);
    }
    ColoringTape c = fresh_tape(1, params);
    CHECK(c.colors.size() == a.colors.size());

    TapeParams empty_range;
    empty_range.n = 3;
    empty_range.color_lo = 1;
    empty_range.color_hi = 0;
    CHECK_THROWS_AS(fresh_tape(0, empty_range), std::invalid_argument);
}

TEST_CASE("tape enumeration is a bijection onto the space") {
    TapeParams params;
    params.n = 3;
    params.color_lo = 0;
    params.color_hi = 2;
    params.flip_slots = 2;
    BigInt space = tape_space_size(params);
    CHECK(space == 27 * 4);
    std::set<std::string> seen;
    for (BigInt i = 0; i < space; ++i) {
        ColoringTape t = tape_at(params, i);
        std::string key;
        for (int c : t.colors) key += static_cast<char>('a' + c);
        for (auto f : t.flips) key += f ? '1' : '0';
        seen.insert(key);
    }
    CHECK(seen.size() == 108);
    CHECK_THROWS_AS(tape_at(params, space), std::out_of_range);
}

TEST_CASE("subset tapes keep the forced vertices") {
    TapeParams params;
    params.n = 6;
    params.subset_keep = 3;
    params.subset_forced = {2};
    BigInt space = tape_space_size(params);
    CHECK(space == 10);  // C(5,2)
    for (BigInt i = 0; i < space; ++i) {
        ColoringTape t = tape_at(params, i);
        REQUIRE(t.subset.size() == 3);
        CHECK(std::find(t.subset.begin(), t.subset.end(), 2) != t.subset.end());
    }
    ColoringTape s = fresh_tape(9, params);
    CHECK(s.subset.size() == 3);
    CHECK(std::find(s.subset.begin(), s.subset.end(), 2) != s.subset.end());
}

TEST_CASE("seeded colors are uniform within 3 sigma over 1e5 draws") {
    TapeParams params;
    params.n = 4;
    params.color_lo = 0;
    params.color_hi = 3;
    const int draws = 100000;
    int counts[4] = {0, 0, 0, 0};
    for (int i = 0; i < draws; ++i) {
        ColoringTape t = fresh_tape(static_cast<std::uint64_t>(i), params);
        ++counts[t.colors[0]];
    }
    double expected = draws / 4.0;
    double sigma = std::sqrt(draws * 0.25 * 0.75);
    for (int c = 0; c < 4; ++c) CHECK(std::abs(counts[c] - expected) <= 3.0 * sigma);
}
