#pragma once

#include "pclab/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pclab {

// What a construction needs from its frozen randomness. Reductions fill this
// in; tapes are then drawn by seed or enumerated exhaustively.
struct TapeParams {
    int n = 0;  // vertices covered by the color/group maps

    // free-color range, inclusive; vertices listed in pinned_colors are fixed
    int color_lo = 0;
    int color_hi = -1;
    bool allow_empty_colors = false;  // empty range legal (vertex gets no color)
    std::vector<std::pair<int, int>> pinned_colors;

    int group_count = 0;  // 0 = no group map
    long long flip_slots = 0;

    int subset_keep = -1;            // -1 = no subset draw
    std::vector<int> subset_forced;  // vertices that are always kept

    bool has_colors() const { return color_hi >= color_lo || !pinned_colors.empty(); }
};

// Frozen randomness: every derived graph is a deterministic function of
// (base graph, tape). Replaying the same (seed, params) reproduces the tape
// bit for bit.
struct ColoringTape {
    std::uint64_t seed = 0;
    std::vector<int> colors;        // per vertex; -1 = no color
    std::vector<int> groups;        // per vertex; -1 = no group
    std::vector<std::uint8_t> flips;
    std::vector<int> subset;        // sorted kept vertices when subset_keep >= 0

    int color(int v) const { return colors.empty() ? -1 : colors[v]; }
    int group(int v) const { return groups.empty() ? -1 : groups[v]; }
};

// Deterministic seeded draw; free vertices uniform over the allowed values.
// Throws when the color range is empty and not explicitly allowed.
ColoringTape fresh_tape(std::uint64_t seed, const TapeParams& params);

// Size of the full tape space for exhaustive enumeration.
BigInt tape_space_size(const TapeParams& params);

// index in [0, tape_space_size): mixed-radix decode, bijective.
ColoringTape tape_at(const TapeParams& params, const BigInt& index);

// splitmix64; the only pseudo-random stream used anywhere.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace pclab
