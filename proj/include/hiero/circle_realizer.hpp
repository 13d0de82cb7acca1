#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hiero/errors.hpp"
#include "hiero/hieroglyph.hpp"

namespace hiero {

// Simple labeled graph on vertices 0..n-1, queried for realizability as an
// interlacement graph.
struct LabeledGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique

    static LabeledGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    bool adjacent(int u, int v) const;

    // Edge-set bitmask, bit j*(j-1)/2 + i for the pair i < j. Requires n <= 11.
    uint64_t edge_mask() const;
};

// Graph file format: first line "n", then one edge "u v" per line, 0-indexed.
LabeledGraph load_graph(const std::string& text);
std::string graph_to_text(const LabeledGraph& g);

inline constexpr int kDefaultRealizeBound = 8;
inline constexpr int kDefaultGraphBound = 7;

// A hieroglyph whose interlacement matrix (letter i <-> vertex i) equals the
// adjacency matrix of g, or std::nullopt when none exists. Backtracking over
// chord placements into a growing circular order, pruning on every decided
// pair; vertex 0's first endpoint is pinned at position 0 to cut rotations.
// Every returned word is re-verified against g before being returned.
std::optional<Hieroglyph> realize_graph(const LabeledGraph& g, int bound = kDefaultRealizeBound);

// Number of distinct realizing words up to rotation and reflection with
// vertex labels fixed (witnesses are not unique in general).
long long count_realizations(const LabeledGraph& g, int bound = kDefaultRealizeBound);

// All graphs on n vertices up to isomorphism, by orderly generation: a graph
// is kept iff its edge mask is least over all vertex permutations, comparing
// bit 0 (the (0,1) pair) first, and candidates are built by attaching one
// vertex to each canonical graph on n-1 vertices. Sorted by that same order.
std::vector<LabeledGraph> all_graphs_up_to_iso(int n, int bound = kDefaultGraphBound);

// Least edge mask over all vertex permutations (bit 0 compared first);
// equal masks <=> isomorphic graphs.
uint64_t graph_canonical_mask(const LabeledGraph& g);

// The graphs on n vertices (up to isomorphism) that are not interlacement
// graphs of any hieroglyph.
std::vector<LabeledGraph> find_nonrealizable(int n, int bound = kDefaultGraphBound);

}  // namespace hiero
