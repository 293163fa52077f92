#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pclab/oracles.hpp"
#include "pclab/reductions.hpp"
#include "pclab/verify.hpp"

using namespace pclab;

namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

ProblemInstance inst(const Graph& g, const std::string& tag, std::vector<int> pinned = {}) {
    return make_instance(oracle_for(g), parse_tag(tag), std::move(pinned));
}

// exact YES-survival by full tape enumeration
template <typename Apply>
Rational exact_survival(const TapeParams& params, Apply&& apply) {
    BigInt space = tape_space_size(params);
    long long yes = 0;
    for (BigInt i = 0; i < space; ++i)
        if (decide(apply(tape_at(params, i)))) ++yes;
    return Rational(BigInt(yes), space);
}

Rational exact_survival_row(const Reduction& row, const ProblemInstance& src) {
    return exact_survival(row.tape_params(src),
                          [&](const ColoringTape& t) { return row.apply(src, t).instance; });
}

}  // namespace

TEST_CASE("color coding: layered survival is exactly 1/4 at k=3") {
    // planted directed 3-path 0 -> 2 -> 3 -> 1 among five vertices
    Graph g = make_graph(5, true, {{0, 2}, {2, 3}, {3, 1}});
    auto src = inst(g, "DirPath_st=3", {0, 1});
    auto params = color_code_params(src, ColorMode::path_st, 3);
    CHECK(tape_space_size(params) == 8);  // three free vertices over two colors
    Rational survival = exact_survival(params, [&](const ColoringTape& t) {
        return color_code(src, ColorMode::path_st, 3, t, parse_tag("PromDirPath_st=3")).instance;
    });
    CHECK(survival == q(1, 4));
    CHECK(survival >= q(1, 4));  // the claimed (k-1)^{-(k-1)} bound
}

TEST_CASE("color coding: empty base stays empty for every tape") {
    Graph g(4, true);
    auto src = inst(g, "DirCycle=4");
    auto params = color_code_params(src, ColorMode::cycle, 4);
    BigInt space = tape_space_size(params);
    for (BigInt i = 0; i < space; i += 17) {
        auto derived = color_code(src, ColorMode::cycle, 4, tape_at(params, i),
                                  parse_tag("DirCycle<=4"));
        CHECK(materialize(*derived.instance.oracle).edge_count() == 0);
    }
}

TEST_CASE("layer insertion: rejected degenerate count, exact expansion") {
    Graph c3 = make_graph(3, true, {{0, 1}, {1, 2}, {2, 0}});
    auto src = inst(c3, "DirCycle=3");
    ColoringTape tape;
    tape.colors = {0, 1, 2};
    CHECK_THROWS_AS(insert_layers(src, 3, 1, 0, tape, parse_tag("DirCycle=5")),
                    std::invalid_argument);

    // i* = 1, two copies: the triangle becomes the unique directed 5-cycle
    auto derived = insert_layers(src, 3, 1, 2, tape, parse_tag("DirCycle=5"));
    Graph dg = materialize(*derived.instance.oracle);
    CHECK(dg.n() == 5);
    CHECK(decide(dg, parse_tag("DirCycle=5"), {}));
    for (int l = 3; l <= 4; ++l) {
        ProblemTag probe = parse_tag("DirCycle=" + std::to_string(l));
        CHECK_FALSE(decide(dg, probe, {}));
    }
    Witness w = find(dg, parse_tag("DirCycle=5"), {});
    CHECK(w.vertices.size() == 5);

    CHECK_THROWS_AS(insert_layers(src, 3, 3, 1, tape, parse_tag("DirCycle=4")),
                    std::invalid_argument);  // i* outside the colour range
}

TEST_CASE("layer insertion: survival of a planted cycle meets 1/l^l") {
    Graph c3 = make_graph(5, true, {{0, 1}, {1, 2}, {2, 0}});
    auto src = inst(c3, "DirCycle<=5");
    auto registry = standard_registry(5);
    const auto& row = find_reduction(registry, "dircycle-atmost-to-exact");
    Rational survival = exact_survival_row(row, src);
    CHECK(survival >= row.claimed_yes_survival);
    CHECK(survival == q(3, 27));  // three rotations of the consistent colouring
}

TEST_CASE("randomize directions: one edge, both orientations") {
    Graph e = make_graph(2, false, {{0, 1}});
    auto src = inst(e, "Path=1");
    auto params = randomize_directions_params(src);
    ColoringTape t0 = tape_at(params, BigInt(0));
    auto d0 = randomize_directions(src, t0, parse_tag("DirPath=1"));
    Graph g0 = materialize(*d0.instance.oracle);
    ColoringTape t1 = tape_at(params, BigInt(1));
    auto d1 = randomize_directions(src, t1, parse_tag("DirPath=1"));
    Graph g1 = materialize(*d1.instance.oracle);
    CHECK(g0.edge_count() == 1);
    CHECK(g1.edge_count() == 1);
    CHECK(g0.has_edge(0, 1) != g1.has_edge(0, 1));
    CHECK(g0.has_edge(1, 0) != g1.has_edge(1, 0));
}

TEST_CASE("randomize directions: exactly 2 of 8 triangle tapes give a 3-cycle") {
    Graph tri = make_graph(3, false, {{0, 1}, {1, 2}, {0, 2}});
    auto src = inst(tri, "Cycle=3");
    auto params = randomize_directions_params(src);
    CHECK(tape_space_size(params) == 8);
    long long cycles = 0;
    for (BigInt i = 0; i < 8; ++i) {
        auto derived = randomize_directions(src, tape_at(params, i), parse_tag("DirCycle=3"));
        if (decide(derived.instance)) ++cycles;
    }
    CHECK(cycles == 2);
    CHECK(q(2, 8) >= q(1, 8));  // claimed 2^{-|E_H|}
}

TEST_CASE("forget directions") {
    Graph both = make_graph(2, true, {{0, 1}, {1, 0}});
    auto derived = forget_directions(inst(both, "DirPath=1"), parse_tag("Path=1"));
    Graph dg = materialize(*derived.instance.oracle);
    CHECK(dg.edge_count() == 1);
    CHECK(dg.has_edge(0, 1));

    // colour-coded directed 5-cycle forgets into exactly the undirected 5-cycle
    Graph c5 = make_graph(5, true, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto src = inst(c5, "DirCycle=5");
    ColoringTape tape;
    tape.colors = {0, 1, 2, 3, 4};
    auto fused = color_code(src, ColorMode::cycle, 5, tape, parse_tag("Cycle=5"));
    Graph fg = materialize(*fused.instance.oracle);
    CHECK(decide(fg, parse_tag("Cycle=5"), {}));
    CHECK_FALSE(decide(fg, parse_tag("Cycle<=4"), {}));
}

TEST_CASE("forget directions: the documented even-k failure mode") {
    // two colour classes joined by a directed complete bipartite matching
    // pattern: no directed cycle at all, but the undirected image has a C4
    Graph g = make_graph(4, true, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(decide(g, parse_tag("DirCycle=4"), {}));
    auto derived = forget_directions(inst(g, "DirCycle=4"), parse_tag("Cycle=4"));
    CHECK(decide(derived.instance));
}

TEST_CASE("attach endpoints") {
    Graph empty(3, true);
    auto src_empty = inst(empty, "DirPath=1");
    auto params = attach_endpoints_params(src_empty);
    auto derived = attach_endpoints(src_empty, tape_at(params, BigInt(0)));
    CHECK(derived.instance.tag == parse_tag("DirPath_st=3"));
    CHECK_FALSE(decide(derived.instance));

    // planted single arc: survival over all tapes is exactly 1/(k+1)^{k+1} = 1/4
    Graph arc = make_graph(3, true, {{0, 1}});
    auto src = inst(arc, "DirPath=1");
    Rational survival =
        exact_survival(attach_endpoints_params(src),
                       [&](const ColoringTape& t) { return attach_endpoints(src, t).instance; });
    CHECK(survival == q(1, 4));
}

TEST_CASE("strip endpoints") {
    // s=0, t=1, path 0 -> 2 -> 3 -> 1; k=3 strips to DirPath=1
    Graph g = make_graph(4, true, {{0, 2}, {2, 3}, {3, 1}});
    auto src = inst(g, "DirPath_st=3", {0, 1});
    auto params = strip_endpoints_params(src);
    long long good = 0;
    BigInt space = tape_space_size(params);
    for (BigInt i = 0; i < space; ++i) {
        auto derived = strip_endpoints(src, tape_at(params, i));
        CHECK(derived.instance.tag == parse_tag("DirPath=1"));
        if (decide(derived.instance)) {
            ++good;
            Graph dg = materialize(*derived.instance.oracle);
            CHECK(dg.has_edge(0, 1));  // compacted arc (2,3)
        }
    }
    CHECK(Rational(BigInt(good), space) == q(1, 4));
    CHECK(Rational(BigInt(good), space) >= q(1, 4));  // 1/(k-1)^{k-1}

    // no arc out of s: every tape yields an empty derived problem
    Graph no_start = make_graph(4, true, {{2, 3}, {3, 1}});
    auto src2 = inst(no_start, "DirPath_st=3", {0, 1});
    for (BigInt i = 0; i < space; ++i) {
        auto derived = strip_endpoints(src2, tape_at(params, i));
        CHECK_FALSE(decide(derived.instance));
    }

    Graph small = make_graph(4, true, {});
    CHECK_THROWS_AS(strip_endpoints_params(inst(small, "DirPath_st=2", {0, 1})),
                    std::invalid_argument);
}

TEST_CASE("merge st") {
    // forced: directed 3-path plus the good tape gives a 3-cycle through s''
    Graph g = make_graph(4, true, {{0, 2}, {2, 3}, {3, 1}});
    auto src = inst(g, "PromDirPath_st=3", {0, 1});
    auto params = merge_st_params(src);
    bool forced = false;
    BigInt space = tape_space_size(params);
    long long survived = 0;
    for (BigInt i = 0; i < space; ++i) {
        auto derived = merge_st(src, tape_at(params, i));
        CHECK(derived.instance.tag == parse_tag("PromDirCycle_s=3"));
        if (decide(derived.instance)) {
            ++survived;
            forced = true;
        }
    }
    CHECK(forced);
    CHECK(Rational(BigInt(survived), space) >= q(1, 4));

    // s,t disconnected: no tape can make a cycle through the merged vertex
    Graph split = make_graph(4, true, {{2, 3}});
    auto src2 = inst(split, "PromDirPath_st=3", {0, 1});
    for (BigInt i = 0; i < space; ++i)
        CHECK_FALSE(decide(merge_st(src2, tape_at(params, i)).instance));
}

TEST_CASE("split s, directed redirect") {
    Graph c5 = make_graph(5, true, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto src = inst(c5, "DirCycle_s=5", {0});
    ColoringTape none;
    auto derived = split_s(src, none);
    CHECK(derived.instance.tag == parse_tag("DirPath_st=5"));
    Graph dg = materialize(*derived.instance.oracle);
    Witness w = find(dg, derived.instance.tag, derived.instance.pinned);
    REQUIRE(w.kind == Witness::Kind::path);
    CHECK(w.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    // the redirect is deterministic and creates no second path
    int count = 0;
    for (int l = 1; l <= 5; ++l) {
        ProblemTag probe = parse_tag("DirPath_st=" + std::to_string(l));
        if (decide(dg, probe, derived.instance.pinned)) ++count;
    }
    CHECK(count == 1);

    // isolated s: derived s and t are disconnected
    Graph iso = make_graph(3, true, {{1, 2}});
    auto derived2 = split_s(inst(iso, "DirCycle_s=3", {0}), none);
    CHECK_FALSE(reachable(materialize(*derived2.instance.oracle), 0, 3));
}

TEST_CASE("split s, undirected tape variant survives with probability 1/2") {
    Graph c4 = make_graph(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto src = inst(c4, "PromCycle_s=4", {0});
    auto params = split_s_params(src);
    Rational survival = exact_survival(
        params, [&](const ColoringTape& t) { return split_s(src, t).instance; });
    CHECK(survival == q(1, 2));
}

TEST_CASE("contract neighborhood: empty neighborhood leaves only the gadget") {
    Graph lonely = make_graph(4, false, {{1, 2}, {2, 3}, {1, 3}});
    auto src = inst(lonely, "Cycle_s=4", {0});
    auto params = contract_neighborhood_params(src);
    auto derived = contract_neighborhood(src, fresh_tape(3, params));
    Graph dg = materialize(*derived.instance.oracle);
    int s = derived.instance.pinned[0];
    CHECK(dg.neighbors(s).size() == 2);  // r and b only
    CHECK_FALSE(decide(derived.instance));
    CHECK(derived.upfront_base_queries == 3);  // n - 1
    CHECK(derived.upfront_base_queries == derived.declared_upfront);
}

TEST_CASE("contract neighborhood: K5 keeps a positive survival rate, NO maps to NO") {
    Graph k5(5, false);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    auto src = inst(k5, "Cycle_s=5", {0});
    auto params = contract_neighborhood_params(src);
    BigInt space = tape_space_size(params);
    long long yes = 0, runs = 0;
    for (BigInt i = 0; i < space; i += 7) {  // coarse but deterministic sweep
        auto derived = contract_neighborhood(src, tape_at(params, i));
        CHECK(derived.instance.tag == parse_tag("Cycle_s<=5"));
        if (decide(derived.instance)) ++yes;
        ++runs;
    }
    CHECK(yes > 0);
    CHECK(static_cast<double>(yes) / runs >= 0.01);

    // C4 through s plus a chord: a NO instance of Cycle_s=5 on every tape
    Graph c4 = make_graph(5, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto src_no = inst(c4, "Cycle_s=5", {0});
    REQUIRE_FALSE(decide(c4, parse_tag("Cycle_s=5"), {0}));
    auto params_no = contract_neighborhood_params(src_no);
    BigInt space_no = tape_space_size(params_no);
    for (BigInt i = 0; i < space_no; ++i) {
        auto derived = contract_neighborhood(src_no, tape_at(params_no, i));
        CHECK_FALSE(decide(derived.instance));
    }
}

TEST_CASE("contract neighborhood: upfront budgets are exact") {
    Graph g = make_graph(6, false, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto src = inst(g, "Cycle_s=6", {0});
    auto derived = contract_neighborhood(src, fresh_tape(1, contract_neighborhood_params(src)));
    CHECK(derived.upfront_base_queries == 5);  // n-1 probes of {s,u}

    Graph d = make_graph(5, true, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto dsrc = inst(d, "DirCycle_s=5", {0});
    auto dd = contract_neighborhood(dsrc, fresh_tape(1, contract_neighborhood_params(dsrc)));
    CHECK(dd.upfront_base_queries == 2 * 4);  // both arc directions per vertex
    CHECK(dd.instance.tag == parse_tag("Cycle_s=5"));

    Graph pp = make_graph(6, false, {{0, 2}, {2, 3}, {3, 4}, {4, 1}});
    auto psrc = inst(pp, "PromPath_st=4", {0, 1});
    auto pd = contract_neighborhood(psrc, fresh_tape(1, contract_neighborhood_params(psrc)));
    CHECK(pd.upfront_base_queries == 2 * 6 - 3);
    CHECK(pd.instance.tag == parse_tag("PromCycle_s=4"));
}

TEST_CASE("contract neighborhood: witness whose t-attachment also touches s") {
    // path 0-2-3-4-5-1 plus the chord {0,5}: the only 5-path ends in a vertex
    // of N(s) and N(t); a blue assignment must still be possible for it
    Graph g = make_graph(6, false, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 5}});
    auto src = inst(g, "PromPath_st=5", {0, 1});
    REQUIRE(promise_holds(g, src.tag, src.pinned));
    REQUIRE(decide(g, src.tag, src.pinned));
    auto params = contract_neighborhood_params(src);
    Rational survival = exact_survival(params, [&](const ColoringTape& t) {
        return contract_neighborhood(src, t).instance;
    });
    CHECK(survival > 0);
    CHECK(survival >= q(1, 100));
}

TEST_CASE("contract neighborhood: directed form finds the planted cycle") {
    Graph d = make_graph(5, true, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto dsrc = inst(d, "DirCycle_s=5", {0});
    auto params = contract_neighborhood_params(dsrc);
    BigInt space = tape_space_size(params);
    long long yes = 0, runs = 0;
    for (BigInt i = 0; i < space; i += 3) {
        if (decide(contract_neighborhood(dsrc, tape_at(params, i)).instance)) ++yes;
        ++runs;
    }
    CHECK(yes > 0);
    CHECK(static_cast<double>(yes) / runs >= 0.01);
}

TEST_CASE("pin s cyclic") {
    Graph c4 = make_graph(4, true, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto src = inst(c4, "DirCycle_s=4", {0});
    auto params = pin_s_cyclic_params(src);
    long long yes = 0;
    BigInt space = tape_space_size(params);
    for (BigInt i = 0; i < space; ++i) {
        auto derived = pin_s_cyclic(src, tape_at(params, i), false);
        CHECK(derived.instance.tag == parse_tag("DirCycle=4"));
        if (decide(derived.instance)) ++yes;
    }
    CHECK(yes > 0);
    CHECK(Rational(BigInt(yes), space) >= q(1, 256));  // 1/k^k

    // keep-pin flavour creates the promise version
    auto kept = pin_s_cyclic(src, tape_at(params, BigInt(0)), true);
    CHECK(kept.instance.tag == parse_tag("PromDirCycle_s=4"));
    CHECK(kept.instance.pinned == std::vector<int>{0});
}

TEST_CASE("pin s cyclic kills cycles that avoid s") {
    // 3-cycle on {1,2,3}; s=0 sits outside every cycle
    ProblemTag probe = parse_tag("DirCycle=4");
    std::uint64_t checked = 0;
    Graph g = make_graph(6, true, {{1, 2}, {2, 3}, {3, 1}, {0, 1}, {4, 5}});
    auto src = inst(g, "DirCycle_s=4", {0});
    auto params = pin_s_cyclic_params(src);
    BigInt space = tape_space_size(params);
    for (BigInt i = 0; i < space; ++i) {
        auto derived = pin_s_cyclic(src, tape_at(params, i), false);
        Graph dg = materialize(*derived.instance.oracle);
        CHECK_FALSE(has_any_cycle(dg));
        CHECK_FALSE(decide(dg, probe, {}));
        ++checked;
    }
    CHECK(checked == 3 * 3 * 3 * 3 * 3);  // five free vertices, colours {1,2,3}
}

TEST_CASE("subsample") {
    Graph g = make_graph(6, false, {{0, 1}, {1, 2}, {3, 4}});
    auto src = inst(g, "Path=2");
    // keep everything: identity view
    auto all_params = subsample_params(src, 6);
    auto all = subsample(src, 6, tape_at(all_params, BigInt(0)));
    CHECK(materialize(*all.instance.oracle) == g);

    // keep only the pinned vertices
    Graph st = make_graph(4, false, {{0, 1}, {2, 3}});
    auto pinned_src = inst(st, "Path_st=1", {0, 1});
    auto two = subsample(pinned_src, 2, tape_at(subsample_params(pinned_src, 2), BigInt(0)));
    CHECK(two.instance.oracle->n() == 2);
    CHECK(decide(two.instance));

    CHECK_THROWS_AS(subsample_params(pinned_src, 1), std::invalid_argument);
}

TEST_CASE("subsample: planted three-vertex path among nine, keep three") {
    Graph g(9, false);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    auto src = inst(g, "Path=2");
    auto params = subsample_params(src, 3);
    CHECK(tape_space_size(params) == 84);
    Rational survival = exact_survival(
        params, [&](const ColoringTape& t) { return subsample(src, 3, t).instance; });
    CHECK(survival == q(1, 84));
}

TEST_CASE("gc embedding: zeros, the K2 example, and exhaustive equivalence") {
    Graph k2 = make_graph(2, false, {{0, 1}});
    auto zeros = gc_embed(make_gc_or_instance(k2, {{0, 0}, {0, 0}}));
    CHECK_FALSE(decide(zeros.instance));

    auto one = gc_embed(make_gc_or_instance(k2, {{1, 0}, {0, 1}}));
    CHECK(one.instance.tag == parse_tag("Cycle_s=5"));
    CHECK(one.instance.oracle->n() == 9);
    Graph dg = materialize(*one.instance.oracle);
    CHECK(decide(dg, parse_tag("Cycle_s=5"), one.instance.pinned));

    // exhaustive equivalence on the 3-vertex path graph
    Graph p3 = make_graph(3, false, {{0, 1}, {1, 2}});
    int agreements = 0;
    for (int mask = 0; mask < (1 << 9); ++mask) {
        std::vector<std::vector<std::uint8_t>> xs(3, std::vector<std::uint8_t>(3, 0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) xs[i][j] = (mask >> (3 * i + j)) & 1 ? 1 : 0;
        GcOrInstance gi = make_gc_or_instance(p3, xs);
        bool lhs = gc_or(gi);
        bool rhs = decide(gc_embed(gi).instance);
        if (lhs == rhs) ++agreements;
    }
    CHECK(agreements == 512);
}

TEST_CASE("amplify") {
    auto registry = standard_registry(5);
    const auto& row = find_reduction(registry, "dirpath-st-to-path-st");

    auto exact_decider = [](const DerivedInstance& d) { return decide(d.instance); };

    // with an exact decider the output equals the base truth on a small sweep
    for (const Graph& g : graphs_upto_iso(4, true, 2)) {
        ProblemInstance src = make_instance(oracle_for(g), row.src, {0, 1});
        bool truth = decide(g, row.src, {0, 1});
        bool amplified = amplify(row, src, exact_decider, row.claimed_yes_survival, 11);
        CHECK(amplified == truth);
    }

    CHECK_THROWS_AS(amplify(row, inst(Graph(4, true), "DirPath_st=5", {0, 1}),
                            exact_decider, q(0), 1),
                    std::invalid_argument);
}

TEST_CASE("amplify drives end-to-end error below 1/3 with a noisy decider") {
    // k = 3 colour coding: a planted directed 3-path survives with probability
    // exactly 1/4, matching the budget handed to the amplifier
    Reduction row;
    row.name = "dirpath-st-to-path-st-k3";
    row.src = parse_tag("DirPath_st=3");
    row.dst = parse_tag("Path_st=3");
    row.claimed_yes_survival = q(1, 4);
    row.tape_params = [](const ProblemInstance& s) {
        return color_code_params(s, ColorMode::path_st, 3);
    };
    row.apply = [](const ProblemInstance& s, const ColoringTape& t) {
        return color_code(s, ColorMode::path_st, 3, t, parse_tag("Path_st=3"));
    };
    Graph yes = make_graph(6, true, {{0, 2}, {2, 3}, {3, 1}});
    Graph no = make_graph(6, true, {{0, 2}, {2, 3}});
    ProblemInstance yes_src = make_instance(oracle_for(yes), row.src, {0, 1});
    ProblemInstance no_src = make_instance(oracle_for(no), row.src, {0, 1});

    std::uint64_t state = 123;
    auto noisy = [&state](const DerivedInstance& d) {
        bool truth = decide(d.instance);
        return splitmix64(state) % 3 == 0 ? !truth : truth;  // error 1/3
    };

    const int trials = 400;
    int wrong = 0;
    for (int i = 0; i < trials; ++i) {
        if (!amplify(row, yes_src, noisy, q(1, 4), 1000 + i)) ++wrong;
        if (amplify(row, no_src, noisy, q(1, 4), 5000 + i)) ++wrong;
    }
    CHECK(static_cast<double>(wrong) / (2 * trials) <= 1.0 / 3.0);
}

TEST_CASE("composition closure: the restricted cycle route stays sound") {
    // DirCycle_s<=k -> DirCycle_s=k -> Cycle_s=k -> Cycle_s<=k, k = 4
    auto registry = standard_registry(4);
    const auto& step1 = find_reduction(registry, "dircycle-s-atmost-to-exact");
    const auto& step2 = find_reduction(registry, "dircycle-s-to-cycle-s");
    const auto& step3 = find_reduction(registry, "cycle-s-exact-to-atmost");

    std::uint64_t state = 9;
    for (const Graph& g : graphs_upto_iso(4, true, 1)) {
        ProblemInstance src = make_instance(oracle_for(g), step1.src, {0});
        if (decide(g, step1.src, {0})) continue;  // soundness constrains NO bases
        for (int trial = 0; trial < 24; ++trial) {
            auto d1 = step1.apply(src, fresh_tape(splitmix64(state), step1.tape_params(src)));
            auto d2 =
                step2.apply(d1.instance, fresh_tape(splitmix64(state), step2.tape_params(d1.instance)));
            auto d3 =
                step3.apply(d2.instance, fresh_tape(splitmix64(state), step3.tape_params(d2.instance)));
            CHECK_FALSE(decide(d3.instance));
        }
    }
}

TEST_CASE("registry names resolve and tags line up") {
    auto registry = standard_registry(5);
    CHECK(registry.size() > 40);
    for (const auto& row : registry) {
        CHECK_FALSE(row.name.empty());
        CHECK(row.claimed_yes_survival >= 0);
        CHECK(row.claimed_yes_survival <= 1);
        validate_tag(row.src);
        validate_tag(row.dst);
    }
    CHECK_THROWS_AS(find_reduction(registry, "no-such-row"), std::invalid_argument);
}
