#include "pclab/verify.hpp"

#include "pclab/oracles.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pclab {

namespace {

int bit_count(int n, bool directed) { return directed ? n * (n - 1) : n * (n - 1) / 2; }

// bit index of pair (u,v) in the mask encoding
int bit_of(int u, int v, int n, bool directed) {
    if (directed) {
        // row-major over ordered pairs, skipping the diagonal
        return u * (n - 1) + (v > u ? v - 1 : v);
    }
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph mask_to_graph(std::uint64_t mask, int n, bool directed) {
    Graph g(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = directed ? 0 : u + 1; v < n; ++v) {
            if (u == v) continue;
            if (mask >> bit_of(u, v, n, directed) & 1u) g.add_edge(u, v);
        }
    return g;
}

}  // namespace

const std::vector<Graph>& graphs_upto_iso(int n, bool directed, int fixed_prefix) {
    static std::map<std::tuple<int, bool, int>, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(n, directed, fixed_prefix);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int bits = bit_count(n, directed);
    if (bits > 30) throw std::invalid_argument("graphs_upto_iso: enumeration too large");

    // permutations of [n] fixing the prefix
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> bit_maps;  // bit i of mask -> bit of permuted mask
    do {
        bool fixes = true;
        for (int i = 0; i < fixed_prefix; ++i) fixes &= perm[i] == i;
        if (!fixes) continue;
        std::vector<int> map(static_cast<std::size_t>(bits));
        for (int u = 0; u < n; ++u)
            for (int v = directed ? 0 : u + 1; v < n; ++v) {
                if (u == v) continue;
                map[static_cast<std::size_t>(bit_of(u, v, n, directed))] =
                    bit_of(perm[u], perm[v], n, directed);
            }
        bit_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin() + fixed_prefix, perm.end()));

    std::vector<Graph> out;
    std::uint64_t total = 1ull << bits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool minimal = true;
        for (const auto& map : bit_maps) {
            std::uint64_t image = 0;
            for (int i = 0; i < bits; ++i)
                if (mask >> i & 1u) image |= 1ull << map[static_cast<std::size_t>(i)];
            if (image < mask) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(mask_to_graph(mask, n, directed));
    }
    auto [pos, inserted] = cache.emplace(key, std::move(out));
    (void)inserted;
    return pos->second;
}

std::vector<CorpusInstance> soundness_corpus(const ProblemTag& tag, int max_undirected_n,
                                             int max_directed_n) {
    int max_n = tag.directed ? max_directed_n : max_undirected_n;
    std::vector<int> pinned;
    for (int i = 0; i < tag.pin_count; ++i) pinned.push_back(i);
    std::vector<CorpusInstance> corpus;
    for (int n = std::max(1, tag.pin_count); n <= max_n; ++n) {
        for (const Graph& g : graphs_upto_iso(n, tag.directed, tag.pin_count)) {
            if (tag.promise && !promise_holds(g, tag, pinned)) continue;
            corpus.push_back({g, pinned});
        }
    }
    return corpus;
}

namespace {

Graph planted_witness_graph(const ProblemTag& tag, int witness_len, int n) {
    Graph g(n, tag.directed);
    std::vector<int> path;
    if (tag.family == Family::path) {
        if (tag.pin_count == 2) {
            path.push_back(0);
            for (int i = 0; i < witness_len - 1; ++i) path.push_back(2 + i);
            path.push_back(1);
        } else {
            for (int i = 0; i <= witness_len; ++i) path.push_back(i);
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
    } else {
        for (int i = 0; i < witness_len; ++i) path.push_back(i);  // s = 0 sits on the cycle
        for (std::size_t i = 0; i < path.size(); ++i)
            g.add_edge(path[i], path[(i + 1) % path.size()]);
    }
    return g;
}

int planted_min_n(const ProblemTag& tag, int witness_len) {
    if (tag.family == Family::path)
        return tag.pin_count == 2 ? witness_len + 1 : witness_len + 1;
    return witness_len;
}

}  // namespace

std::vector<CorpusInstance> planted_corpus(const ProblemTag& tag, int witness_len,
                                           std::uint64_t seed) {
    std::vector<int> pinned;
    for (int i = 0; i < tag.pin_count; ++i) pinned.push_back(i);
    int base_n = planted_min_n(tag, witness_len);
    std::vector<CorpusInstance> corpus;
    std::uint64_t state = seed;
    for (int n : {base_n, base_n + 2, std::min(12, base_n + 4)}) {
        if (n < base_n) continue;
        Graph bare = planted_witness_graph(tag, witness_len, n);
        corpus.push_back({bare, pinned});
        // noisy variant: chords and decoys among the free vertices; containment
        // is monotone so the instance stays YES, promise corpora filter
        // afterwards, and the pinned neighbourhoods stay those of the witness
        Graph noisy = bare;
        int attempts = n;
        for (int i = 0; i < attempts; ++i) {
            int u = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
            int v = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
            if (u == v) continue;
            if (std::find(pinned.begin(), pinned.end(), u) != pinned.end()) continue;
            if (std::find(pinned.begin(), pinned.end(), v) != pinned.end()) continue;
            Graph candidate = noisy;
            candidate.add_edge(u, v);
            if (tag.promise && !promise_holds(candidate, tag, pinned)) continue;
            noisy = candidate;
        }
        if (!(noisy == bare)) corpus.push_back({noisy, pinned});
    }
    // dedup identical graphs
    std::vector<CorpusInstance> unique;
    for (auto& ci : corpus) {
        bool seen = false;
        for (const auto& u : unique)
            seen |= u.g == ci.g;
        if (!seen) unique.push_back(std::move(ci));
    }
    return unique;
}

double wilson_lower_bound(long long successes, long long trials) {
    if (trials <= 0) return 0.0;
    const double z = 2.5758293035489004;  // 99% two-sided
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double centre = p + z2 / (2 * n);
    double margin = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    return std::max(0.0, (centre - margin) / (1 + z2 / n));
}

namespace {

struct TapeIteration {
    bool exact;
    long long count;  // tapes to visit
    BigInt space;
};

TapeIteration plan_tapes(const TapeParams& params, const VerifyOptions& opts) {
    BigInt space = tape_space_size(params);
    if (space <= opts.exhaustive_tape_limit)
        return {true, space.convert_to<long long>(), space};
    return {false, opts.sampled_tapes, space};
}

ColoringTape tape_for(const TapeParams& params, const TapeIteration& plan, long long index,
                      std::uint64_t seed) {
    if (plan.exact) return tape_at(params, BigInt(index));
    std::uint64_t state = seed + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ull;
    return fresh_tape(splitmix64(state), params);
}

template <typename Fn>
void parallel_over(std::size_t count, int threads, Fn&& fn) {
    unsigned hw = threads > 0 ? static_cast<unsigned>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
    hw = std::min<unsigned>(hw, static_cast<unsigned>(std::max<std::size_t>(1, count)));
    if (hw <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < hw; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(count);  // drain remaining work
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

bool derived_yes(const DerivedInstance& d) {
    Graph dg = materialize(*d.instance.oracle);
    return decide(dg, d.instance.tag, d.instance.pinned);
}

std::string corpus_label(const Reduction& red) {
    return "src=" + to_string(red.src);
}

}  // namespace

VerificationReport verify_soundness(const Reduction& red, const std::vector<CorpusInstance>& corpus,
                                    const VerifyOptions& opts) {
    VerificationReport rep;
    rep.reduction = red.name;
    rep.check = "soundness";
    rep.corpus = corpus_label(red);
    rep.instances = static_cast<long long>(corpus.size());

    std::atomic<long long> violations{0};
    std::atomic<long long> runs{0};
    std::mutex note_mutex;

    parallel_over(corpus.size(), opts.threads, [&](std::size_t i) {
        const auto& ci = corpus[i];
        ProblemTag plain = red.src;
        plain.promise = false;
        if (decide(ci.g, plain, ci.pinned)) return;  // only NO bases constrain soundness
        ProblemInstance src = make_instance(oracle_for(ci.g), red.src, ci.pinned);
        TapeParams params = red.tape_params(src);
        TapeIteration plan = plan_tapes(params, opts);
        for (long long t = 0; t < plan.count; ++t) {
            ColoringTape tape = tape_for(params, plan, t, opts.seed);
            DerivedInstance derived = red.apply(src, tape);
            runs.fetch_add(1, std::memory_order_relaxed);
            if (derived_yes(derived)) {
                violations.fetch_add(1, std::memory_order_relaxed);
                std::lock_guard<std::mutex> lock(note_mutex);
                if (rep.note.empty())
                    rep.note = "NO->YES on " + to_edge_list(ci.g) + " tape#" + std::to_string(t);
            }
        }
    });

    rep.tape_runs = runs.load();
    rep.soundness_violations = violations.load();
    rep.pass = rep.soundness_violations == 0;
    return rep;
}

VerificationReport verify_completeness(const Reduction& red,
                                       const std::vector<CorpusInstance>& planted,
                                       const VerifyOptions& opts) {
    VerificationReport rep;
    rep.reduction = red.name;
    rep.check = "completeness";
    rep.corpus = "planted " + corpus_label(red);
    rep.instances = static_cast<long long>(planted.size());
    rep.claimed = red.claimed_yes_survival;
    rep.exact = true;
    rep.min_survival = Rational(1);
    rep.empirical_rate = 1.0;
    rep.wilson_lower = 1.0;

    std::mutex merge_mutex;
    std::atomic<long long> runs{0};

    parallel_over(planted.size(), opts.threads, [&](std::size_t i) {
        const auto& ci = planted[i];
        ProblemTag plain = red.src;
        plain.promise = false;
        if (!decide(ci.g, plain, ci.pinned))
            throw std::invalid_argument("verify_completeness: corpus element is not a YES instance");
        ProblemInstance src = make_instance(oracle_for(ci.g), red.src, ci.pinned);
        TapeParams params = red.tape_params(src);
        TapeIteration plan = plan_tapes(params, opts);
        long long survived = 0;
        for (long long t = 0; t < plan.count; ++t) {
            ColoringTape tape = tape_for(params, plan, t, opts.seed);
            if (derived_yes(red.apply(src, tape))) ++survived;
        }
        runs.fetch_add(plan.count, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (plan.exact) {
            Rational survival(BigInt(survived), plan.space);
            rep.min_survival = std::min(rep.min_survival, survival);
        } else {
            rep.exact = false;
            double rate = static_cast<double>(survived) / static_cast<double>(plan.count);
            double lower = wilson_lower_bound(survived, plan.count);
            rep.empirical_rate = std::min(rep.empirical_rate, rate);
            rep.wilson_lower = std::min(rep.wilson_lower, lower);
        }
    });

    rep.tape_runs = runs.load();
    if (rep.exact)
        rep.pass = rep.min_survival >= rep.claimed;
    else
        rep.pass = rep.wilson_lower >= to_double(rep.claimed);
    return rep;
}

VerificationReport verify_promise(const Reduction& red, const std::vector<CorpusInstance>& corpus,
                                  const VerifyOptions& opts) {
    VerificationReport rep;
    rep.reduction = red.name;
    rep.check = "promise";
    rep.corpus = corpus_label(red);
    rep.instances = static_cast<long long>(corpus.size());
    rep.claimed = red.claimed_yes_survival;
    rep.exact = true;
    rep.min_survival = Rational(1);
    if (!red.dst.promise) {
        rep.skipped = true;
        rep.pass = true;
        rep.note = "target carries no promise";
        return rep;
    }

    std::mutex merge_mutex;
    std::atomic<long long> runs{0};
    std::atomic<long long> violations{0};
    std::atomic<long long> bad_tapes{0};

    parallel_over(corpus.size(), opts.threads, [&](std::size_t i) {
        const auto& ci = corpus[i];
        ProblemTag src_plain = red.src;
        src_plain.promise = false;
        bool base_yes = decide(ci.g, src_plain, ci.pinned);
        ProblemInstance src = make_instance(oracle_for(ci.g), red.src, ci.pinned);
        TapeParams params = red.tape_params(src);
        TapeIteration plan = plan_tapes(params, opts);
        long long good_yes = 0;
        for (long long t = 0; t < plan.count; ++t) {
            ColoringTape tape = tape_for(params, plan, t, opts.seed);
            DerivedInstance derived = red.apply(src, tape);
            Graph dg = materialize(*derived.instance.oracle);
            ProblemTag dst_plain = derived.instance.tag;
            dst_plain.promise = false;
            bool d_yes = decide(dg, dst_plain, derived.instance.pinned);
            bool d_prom = promise_holds(dg, derived.instance.tag, derived.instance.pinned);
            if (!base_yes) {
                // NO instances must land on promise-valid NO instances, always
                if (d_yes || !d_prom) violations.fetch_add(1, std::memory_order_relaxed);
            } else {
                if (d_yes && d_prom) ++good_yes;
                if (!d_prom) bad_tapes.fetch_add(1, std::memory_order_relaxed);
            }
        }
        runs.fetch_add(plan.count, std::memory_order_relaxed);
        if (base_yes) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            if (plan.exact) {
                rep.min_survival = std::min(rep.min_survival, Rational(BigInt(good_yes), plan.space));
            } else {
                rep.exact = false;
                rep.wilson_lower =
                    std::min(rep.wilson_lower, wilson_lower_bound(good_yes, plan.count));
            }
        }
    });

    rep.tape_runs = runs.load();
    rep.soundness_violations = violations.load();
    rep.promise_violating_tapes = bad_tapes.load();
    bool yes_ok = rep.exact ? rep.min_survival >= rep.claimed
                            : rep.wilson_lower >= to_double(rep.claimed);
    rep.pass = rep.soundness_violations == 0 && yes_ok;
    return rep;
}

VerificationReport verify_fanout(const Reduction& red, const std::vector<CorpusInstance>& corpus,
                                 const VerifyOptions& opts) {
    VerificationReport rep;
    rep.reduction = red.name;
    rep.check = "fanout";
    rep.corpus = corpus_label(red);
    rep.pass = true;

    std::uint64_t max_fanout = 0;
    std::uint64_t declared = red.declared_fanout;
    std::uint64_t state = opts.seed;

    long long instances = 0;
    for (const auto& ci : corpus) {
        if (instances >= 24) break;  // fanout is structural; a slice suffices
        ++instances;
        ProblemInstance src = make_instance(oracle_for(ci.g), red.src, ci.pinned);
        TapeParams params = red.tape_params(src);
        for (int rep_i = 0; rep_i < 4; ++rep_i) {
            ColoringTape tape = fresh_tape(splitmix64(state), params);
            DerivedInstance derived = red.apply(src, tape);
            rep.upfront_observed = std::max(rep.upfront_observed, derived.upfront_base_queries);
            rep.upfront_declared = std::max(rep.upfront_declared, derived.declared_upfront);
            if (derived.upfront_base_queries != derived.declared_upfront) {
                rep.pass = false;
                rep.note = "upfront budget mismatch";
            }
            std::uint64_t row_declared = declared ? declared : derived.declared_fanout;
            rep.declared_fanout = std::max(rep.declared_fanout, row_declared);
            const auto& oracle = *derived.instance.oracle;
            for (int u = 0; u < oracle.n(); ++u) {
                for (int v = oracle.directed() ? 0 : u + 1; v < oracle.n(); ++v) {
                    if (u == v) continue;
                    std::uint64_t before = derived.base->query_count() +
                                           (derived.bits ? derived.bits->query_count() : 0);
                    oracle.query(u, v);
                    std::uint64_t cost = derived.base->query_count() +
                                         (derived.bits ? derived.bits->query_count() : 0) - before;
                    max_fanout = std::max(max_fanout, cost);
                    if (cost > row_declared) {
                        rep.pass = false;
                        if (rep.note.empty()) rep.note = "fanout above declaration";
                    }
                }
            }
        }
    }
    rep.instances = instances;
    rep.max_fanout_observed = max_fanout;
    return rep;
}

std::vector<VerificationReport> verify_reduction(const Reduction& red, const VerifyOptions& opts) {
    std::vector<VerificationReport> out;
    if (red.odd_k_only && red.dst.k % 2 == 0) {
        for (const char* check : {"soundness", "completeness", "promise", "fanout"}) {
            VerificationReport rep;
            rep.reduction = red.name;
            rep.check = check;
            rep.skipped = true;
            rep.pass = true;
            rep.note = "construction holds for odd k only";
            out.push_back(std::move(rep));
        }
        return out;
    }
    auto corpus = soundness_corpus(red.src, opts.max_undirected_n, opts.max_directed_n);
    out.push_back(verify_soundness(red, corpus, opts));

    int witness_len = red.witness_len > 0 ? red.witness_len : red.src.k;
    auto planted = planted_corpus(red.src, witness_len, opts.seed);
    out.push_back(verify_completeness(red, planted, opts));
    out.push_back(verify_promise(red, corpus, opts));
    out.push_back(verify_fanout(red, corpus, opts));
    return out;
}

VerificationReport verify_gc_embedding(int max_n) {
    VerificationReport rep;
    rep.reduction = "gc-embed";
    rep.check = "exact-equivalence";
    rep.corpus = "all graphs x all bit patterns, n <= " + std::to_string(max_n);
    rep.pass = true;
    rep.exact = true;
    long long agreements = 0, total = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : graphs_upto_iso(n, false, 0)) {
            long long patterns = 1ll << (n * n);
            for (long long bitsmask = 0; bitsmask < patterns; ++bitsmask) {
                std::vector<std::vector<std::uint8_t>> strings(
                    static_cast<std::size_t>(n), std::vector<std::uint8_t>(n, 0));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        strings[i][j] = (bitsmask >> (i * n + j)) & 1 ? 1 : 0;
                GcOrInstance inst = make_gc_or_instance(g, strings);
                bool direct = gc_or(inst);
                DerivedInstance derived = gc_embed(inst);
                bool embedded = derived_yes(derived);
                ++total;
                if (direct == embedded) {
                    ++agreements;
                } else {
                    rep.pass = false;
                    if (rep.note.empty())
                        rep.note = "mismatch at n=" + std::to_string(n) +
                                   " mask=" + std::to_string(bitsmask);
                }
            }
        }
    }
    rep.instances = total;
    rep.tape_runs = total;
    rep.note = rep.note.empty()
                   ? std::to_string(agreements) + "/" + std::to_string(total) + " agreements"
                   : rep.note;
    return rep;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["reduction"] = r.reduction;
    j["check"] = r.check;
    j["corpus"] = r.corpus;
    j["pass"] = r.pass;
    j["skipped"] = r.skipped;
    j["instances"] = r.instances;
    j["tape_runs"] = r.tape_runs;
    j["soundness_violations"] = r.soundness_violations;
    j["exact"] = r.exact;
    j["min_survival"] = to_string(r.min_survival);
    j["empirical_rate"] = r.empirical_rate;
    j["wilson_lower"] = r.wilson_lower;
    j["claimed"] = to_string(r.claimed);
    j["promise_violating_tapes"] = r.promise_violating_tapes;
    j["max_fanout_observed"] = r.max_fanout_observed;
    j["declared_fanout"] = r.declared_fanout;
    j["upfront_observed"] = r.upfront_observed;
    j["upfront_declared"] = r.upfront_declared;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

std::string report_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "reduction                          check         pass  detail\n";
    for (const auto& r : reports) {
        std::string detail;
        if (r.check == "soundness")
            detail = std::to_string(r.soundness_violations) + " violations / " +
                     std::to_string(r.tape_runs) + " runs";
        else if (r.check == "completeness" || r.check == "promise")
            detail = (r.exact ? "survival>=" + to_string(r.min_survival)
                              : "wilson>=" + std::to_string(r.wilson_lower)) +
                     " claimed " + to_string(r.claimed);
        else if (r.check == "fanout")
            detail = "fanout " + std::to_string(r.max_fanout_observed) + "/" +
                     std::to_string(r.declared_fanout) + " upfront " +
                     std::to_string(r.upfront_observed) + "/" + std::to_string(r.upfront_declared);
        else
            detail = r.note;
        os << r.reduction;
        for (std::size_t i = r.reduction.size(); i < 35; ++i) os << ' ';
        os << r.check;
        for (std::size_t i = r.check.size(); i < 14; ++i) os << ' ';
        os << (r.skipped ? "skip" : r.pass ? "ok  " : "FAIL") << "  " << detail << "\n";
    }
    return os.str();
}

}  // namespace pclab
