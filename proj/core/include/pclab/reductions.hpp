#pragma once

#include "pclab/oracles.hpp"
#include "pclab/problems.hpp"
#include "pclab/rational.hpp"
#include "pclab/tape.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pclab {

// Result of applying an instance transformer under one tape. Answers of the
// derived oracle are pure functions of (base graph, tape).
struct DerivedInstance {
    ProblemInstance instance;                      // oracle is the derived view
    std::shared_ptr<CountedOracle> base;           // source oracle, for accounting
    std::shared_ptr<const BitMatrixOracle> bits;   // extra counted input (gc embedding)
    std::uint64_t upfront_base_queries = 0;        // eager learning cost, 0 for lazy views
    std::uint64_t declared_upfront = 0;
    std::uint64_t declared_fanout = 1;             // max base queries per derived query
};

enum class ColorMode { path, path_st, cycle, cycle_through_s };

// --- constructions ----------------------------------------------------------
// Each construction comes with a params function describing its tape space,
// so callers can either draw seeded tapes or enumerate the space exhaustively.

TapeParams color_code_params(const ProblemInstance& src, ColorMode mode, int colors);
// Keeps an edge/arc iff its endpoint colors are consecutive: path modes use
// c(v) = c(u)+1 (|c(u)-c(v)| = 1 when undirected), cycle modes work mod the
// color count. dst decides whether directions are kept or dropped on the way.
DerivedInstance color_code(const ProblemInstance& src, ColorMode mode, int colors,
                           const ColoringTape& tape, const ProblemTag& dst);

TapeParams insert_layers_params(const ProblemInstance& src, int colors);
// (colors, t)-construction: cyclic (or layered, for st-paths) color coding,
// then every vertex of color i_star grows a chain of t copies; edges leaving
// color i_star re-root at the last copy. Path/cycle lengths through i_star
// grow by exactly t and no new cycles appear.
DerivedInstance insert_layers(const ProblemInstance& src, int colors, int i_star, int t,
                              const ColoringTape& tape, const ProblemTag& dst);

TapeParams randomize_directions_params(const ProblemInstance& src);
DerivedInstance randomize_directions(const ProblemInstance& src, const ColoringTape& tape,
                                     const ProblemTag& dst);

// Tape-free: undirected edge present iff either arc is. Fanout 2.
DerivedInstance forget_directions(const ProblemInstance& src, const ProblemTag& dst);

TapeParams attach_endpoints_params(const ProblemInstance& src);
// DirPath^{=k} -> DirPath_{s,t}^{=k+2}; fresh s,t above the old range.
DerivedInstance attach_endpoints(const ProblemInstance& src, const ColoringTape& tape);

TapeParams strip_endpoints_params(const ProblemInstance& src);
// DirPath_{s,t}^{=k} -> DirPath^{=k-2}; boundary-colored arcs additionally
// certify their attachment to s resp. t in the base (fanout 3).
DerivedInstance strip_endpoints(const ProblemInstance& src, const ColoringTape& tape);

TapeParams merge_st_params(const ProblemInstance& src);
// PromDirPath_{s,t}^{=k} -> PromDirCycle_s^{=k}, color coding fused in.
DerivedInstance merge_st(const ProblemInstance& src, const ColoringTape& tape);

TapeParams split_s_params(const ProblemInstance& src);
// Directed: redirect all in-arcs of s to a fresh t (deterministic).
// Undirected: every s-edge goes to s or to fresh t by a tape bit.
DerivedInstance split_s(const ProblemInstance& src, const ColoringTape& tape);

TapeParams contract_neighborhood_params(const ProblemInstance& src);
// Eager red/yellow/blue gadget. Learns the neighborhood of s (and t for the
// 2-group path form) upfront, contracts the red and blue groups into fresh
// vertices r,b, and (for the cycle forms) colors the rest so that any
// surviving cycle through s runs s-r-...-b-s and has length >= k.
DerivedInstance contract_neighborhood(const ProblemInstance& src, const ColoringTape& tape);

TapeParams pin_s_cyclic_params(const ProblemInstance& src);
// k-color cyclic construction through s: only s has color 0, so surviving
// directed cycles have length exactly k and pass through s.
DerivedInstance pin_s_cyclic(const ProblemInstance& src, const ColoringTape& tape, bool keep_pin);

TapeParams subsample_params(const ProblemInstance& src, int keep);
// Induced subgraph on a random keep-subset; pinned vertices always kept.
DerivedInstance subsample(const ProblemInstance& src, int keep, const ColoringTape& tape);

// GC_G o OR_n -> Cycle_s^{=5} on 4n+1 vertices; equivalence is exact in both
// directions, each derived query costs at most one probe (graph or bit).
DerivedInstance gc_embed(const GcOrInstance& src);

// --- registry ---------------------------------------------------------------

enum class EdgeKind { transformer, identity, cited };

struct Reduction {
    std::string name;
    ProblemTag src;
    ProblemTag dst;
    EdgeKind kind = EdgeKind::transformer;
    bool odd_k_only = false;
    // lower bound on YES-survival from the construction's proof; when the
    // source only promises a positive constant, this is a recorded
    // calibration floor instead (survival_from_paper = false)
    Rational claimed_yes_survival = Rational(1);
    bool survival_from_paper = true;
    bool deterministic = false;
    std::uint64_t declared_fanout = 1;
    // length of the planted witness the survival claim speaks about
    // (0 = the source problem's k); layer-insertion rows claim a bound for a
    // specific short witness, not for every YES instance
    int witness_len = 0;

    std::function<TapeParams(const ProblemInstance&)> tape_params;
    std::function<DerivedInstance(const ProblemInstance&, const ColoringTape&)> apply;
};

// Every transformer of the problem web instantiated for length parameter k
// (k >= 4; odd-k-only rows are included with their flag set).
std::vector<Reduction> standard_registry(int k);

const Reduction& find_reduction(const std::vector<Reduction>& registry, const std::string& name);

// Relation edges of the fixed-k problem web: everything the registry proves,
// plus promise-inclusion identities and the cited linear-query results, which
// are axioms here (flagged, never re-derived).
struct RelationEdge {
    std::string via;
    ProblemTag src;
    ProblemTag dst;
    EdgeKind kind;
    bool odd_k_only = false;
};
std::vector<RelationEdge> problem_relations(int k);

// All problem tags appearing in the fixed-k web (the two unrestricted path
// problems enter at length k-2).
std::vector<ProblemTag> problem_web_nodes(int k);

// Generic one-sided amplification: majority-voted decider calls per tape,
// over fresh seeded tapes, accepting iff any tape run accepts. decider may
// err with probability <= 1/3; overall error stays <= 1/3 for YES-survival
// >= p.
bool amplify(const Reduction& reduction, const ProblemInstance& src,
             const std::function<bool(const DerivedInstance&)>& decider, const Rational& p,
             std::uint64_t seed);

}  // namespace pclab
