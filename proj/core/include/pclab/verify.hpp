#pragma once

#include "pclab/graph.hpp"
#include "pclab/problems.hpp"
#include "pclab/rational.hpp"
#include "pclab/reductions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pclab {

struct CorpusInstance {
    Graph g;
    std::vector<int> pinned;
};

// All graphs on n vertices up to isomorphism, as lexicographically minimal
// representatives. Permutations fix the first fixed_prefix vertices, so
// pinned instances stay pinned. Cached; n is limited to enumeration scale.
const std::vector<Graph>& graphs_upto_iso(int n, bool directed, int fixed_prefix);

// Isomorph-reduced graphs for 1 <= n <= (6 undirected / 5 directed), pinned
// vertices fixed at 0 (and 1), promise-filtered when the tag asks for it.
std::vector<CorpusInstance> soundness_corpus(const ProblemTag& tag, int max_undirected_n = 6,
                                             int max_directed_n = 5);

// YES instances with a planted witness of the given length: the bare
// witness, plus variants with decoy vertices and noise edges, promise-valid
// where required.
std::vector<CorpusInstance> planted_corpus(const ProblemTag& tag, int witness_len,
                                           std::uint64_t seed);

struct VerifyOptions {
    long long exhaustive_tape_limit = 1'000'000;
    int sampled_tapes = 10'000;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    int max_undirected_n = 6;
    int max_directed_n = 5;
    int planted_sizes = 2;
};

struct VerificationReport {
    std::string reduction;
    std::string check;   // soundness | completeness | promise | fanout
    std::string corpus;
    bool pass = false;
    bool skipped = false;
    std::string note;

    long long instances = 0;
    long long tape_runs = 0;
    long long soundness_violations = 0;

    bool exact = false;          // tape spaces enumerated exactly
    Rational min_survival{0};    // exact mode
    double empirical_rate = 1.0;
    double wilson_lower = 1.0;   // 99% lower confidence bound, sampled mode
    Rational claimed{0};

    long long promise_violating_tapes = 0;

    std::uint64_t max_fanout_observed = 0;
    std::uint64_t declared_fanout = 0;
    std::uint64_t upfront_observed = 0;
    std::uint64_t upfront_declared = 0;
};

VerificationReport verify_soundness(const Reduction& red, const std::vector<CorpusInstance>& corpus,
                                    const VerifyOptions& opts);
VerificationReport verify_completeness(const Reduction& red,
                                       const std::vector<CorpusInstance>& planted,
                                       const VerifyOptions& opts);
VerificationReport verify_promise(const Reduction& red, const std::vector<CorpusInstance>& corpus,
                                  const VerifyOptions& opts);
VerificationReport verify_fanout(const Reduction& red, const std::vector<CorpusInstance>& corpus,
                                 const VerifyOptions& opts);

// The four verifiers with their standard corpora.
std::vector<VerificationReport> verify_reduction(const Reduction& red, const VerifyOptions& opts);

// Exhaustive two-sided equivalence check of the graph-collision embedding:
// every bit pattern for every graph on up to max_n vertices.
VerificationReport verify_gc_embedding(int max_n);

std::string report_to_json(const VerificationReport& report);
std::string report_table(const std::vector<VerificationReport>& reports);

// 99% Wilson lower confidence bound for successes/trials.
double wilson_lower_bound(long long successes, long long trials);

}  // namespace pclab
