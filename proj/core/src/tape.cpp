#include "pclab/tape.hpp"

#include <algorithm>
#include <stdexcept>

namespace pclab {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

// uniform value in [0, bound) without modulo bias
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = splitmix64(state);
        if (r >= threshold) return r % bound;
    }
}

void check(const TapeParams& p) {
    if (p.n < 0) throw std::invalid_argument("tape: negative vertex count");
    for (auto [v, c] : p.pinned_colors) {
        (void)c;
        if (v < 0 || v >= p.n) throw std::invalid_argument("tape: pinned vertex out of range");
    }
    // lo = 0, hi = -1 is the "no colours requested" default; any other empty
    // range is a caller mistake unless explicitly allowed
    bool empty_range = p.color_hi < p.color_lo && !(p.color_lo == 0 && p.color_hi == -1);
    if (empty_range && !p.allow_empty_colors)
        throw std::invalid_argument("tape: empty color range");
    if (p.subset_keep >= 0) {
        if (p.subset_keep > p.n) throw std::invalid_argument("tape: subset larger than n");
        if (static_cast<int>(p.subset_forced.size()) > p.subset_keep)
            throw std::invalid_argument("tape: more forced vertices than kept slots");
    }
}

std::vector<int> free_color_vertices(const TapeParams& p) {
    std::vector<bool> pinned(p.n, false);
    for (auto [v, c] : p.pinned_colors) {
        (void)c;
        pinned[v] = true;
    }
    std::vector<int> out;
    for (int v = 0; v < p.n; ++v)
        if (!pinned[v]) out.push_back(v);
    return out;
}

std::vector<int> free_subset_pool(const TapeParams& p) {
    std::vector<bool> forced(p.n, false);
    for (int v : p.subset_forced) forced[v] = true;
    std::vector<int> out;
    for (int v = 0; v < p.n; ++v)
        if (!forced[v]) out.push_back(v);
    return out;
}

}  // namespace

ColoringTape fresh_tape(std::uint64_t seed, const TapeParams& params) {
    check(params);
    ColoringTape tape;
    tape.seed = seed;
    std::uint64_t state = seed;

    if (params.has_colors()) {
        tape.colors.assign(params.n, -1);
        int span = params.color_hi - params.color_lo + 1;
        for (int v : free_color_vertices(params))
            if (span > 0)
                tape.colors[v] =
                    params.color_lo + static_cast<int>(bounded(state, static_cast<std::uint64_t>(span)));
        for (auto [v, c] : params.pinned_colors) tape.colors[v] = c;
    }

    if (params.group_count > 0) {
        tape.groups.assign(params.n, -1);
        for (int v = 0; v < params.n; ++v)
            tape.groups[v] =
                static_cast<int>(bounded(state, static_cast<std::uint64_t>(params.group_count)));
    }

    for (long long i = 0; i < params.flip_slots; ++i)
        tape.flips.push_back(static_cast<std::uint8_t>(splitmix64(state) & 1u));

    if (params.subset_keep >= 0) {
        auto pool = free_subset_pool(params);
        int draw = params.subset_keep - static_cast<int>(params.subset_forced.size());
        // partial Fisher-Yates over the pool
        for (int i = 0; i < draw; ++i) {
            std::size_t j = i + static_cast<std::size_t>(
                                    bounded(state, static_cast<std::uint64_t>(pool.size() - i)));
            std::swap(pool[i], pool[j]);
        }
        tape.subset.assign(pool.begin(), pool.begin() + draw);
        tape.subset.insert(tape.subset.end(), params.subset_forced.begin(),
                           params.subset_forced.end());
        std::sort(tape.subset.begin(), tape.subset.end());
    }

    return tape;
}

BigInt tape_space_size(const TapeParams& params) {
    check(params);
    BigInt total = 1;
    if (params.has_colors()) {
        int span = std::max(0, params.color_hi - params.color_lo + 1);
        if (span > 0) {
            BigInt colors = 1;
            for (std::size_t i = 0; i < free_color_vertices(params).size(); ++i) colors *= span;
            total *= colors;
        }
    }
    if (params.group_count > 0) {
        BigInt groups = 1;
        for (int v = 0; v < params.n; ++v) groups *= params.group_count;
        total *= groups;
    }
    for (long long i = 0; i < params.flip_slots; ++i) total *= 2;
    if (params.subset_keep >= 0) {
        auto pool = free_subset_pool(params);
        int draw = params.subset_keep - static_cast<int>(params.subset_forced.size());
        total *= binomial(static_cast<unsigned>(pool.size()), static_cast<unsigned>(draw));
    }
    return total;
}

ColoringTape tape_at(const TapeParams& params, const BigInt& index) {
    check(params);
    if (index < 0 || index >= tape_space_size(params))
        throw std::out_of_range("tape: enumeration index out of range");
    BigInt rest = index;
    ColoringTape tape;
    tape.seed = 0;

    if (params.has_colors()) {
        tape.colors.assign(params.n, -1);
        int span = std::max(0, params.color_hi - params.color_lo + 1);
        if (span > 0) {
            for (int v : free_color_vertices(params)) {
                tape.colors[v] = params.color_lo + static_cast<int>(rest % span);
                rest /= span;
            }
        }
        for (auto [v, c] : params.pinned_colors) tape.colors[v] = c;
    }

    if (params.group_count > 0) {
        tape.groups.assign(params.n, -1);
        for (int v = 0; v < params.n; ++v) {
            tape.groups[v] = static_cast<int>(rest % params.group_count);
            rest /= params.group_count;
        }
    }

    for (long long i = 0; i < params.flip_slots; ++i) {
        tape.flips.push_back(static_cast<std::uint8_t>(static_cast<int>(rest % 2)));
        rest /= 2;
    }

    if (params.subset_keep >= 0) {
        auto pool = free_subset_pool(params);
        int draw = params.subset_keep - static_cast<int>(params.subset_forced.size());
        // combinatorial unranking in lexicographic order
        BigInt rank = rest % binomial(static_cast<unsigned>(pool.size()), static_cast<unsigned>(draw));
        std::vector<int> chosen;
        int remaining = draw;
        for (std::size_t i = 0; i < pool.size() && remaining > 0; ++i) {
            BigInt with_i = binomial(static_cast<unsigned>(pool.size() - i - 1),
                                     static_cast<unsigned>(remaining - 1));
            if (rank < with_i) {
                chosen.push_back(pool[i]);
                --remaining;
            } else {
                rank -= with_i;
            }
        }
        tape.subset = chosen;
        tape.subset.insert(tape.subset.end(), params.subset_forced.begin(),
                           params.subset_forced.end());
        std::sort(tape.subset.begin(), tape.subset.end());
    }

    return tape;
}

}  // namespace pclab
