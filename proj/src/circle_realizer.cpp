#include "hiero/circle_realizer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hiero {

LabeledGraph LabeledGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range: " +
                                                     std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw Error(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return LabeledGraph{n, std::move(edges)};
}

bool LabeledGraph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

uint64_t LabeledGraph::edge_mask() const {
    if (n > 11)
        throw Error(ErrorKind::DimensionTooLarge,
                    "edge mask needs n <= 11, got " + std::to_string(n));
    uint64_t mask = 0;
    for (auto [u, v] : edges) mask |= 1ull << (v * (v - 1) / 2 + u);
    return mask;
}

LabeledGraph load_graph(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string extra;
        if (n < 0) {
            if (!(fields >> n) || n < 0)
                throw Error(ErrorKind::InvalidGraph,
                            "first line must be the vertex count, got '" + line + "'");
            if (fields >> extra)
                throw Error(ErrorKind::InvalidGraph, "trailing text after vertex count: '" +
                                                         extra + "'");
            continue;
        }
        int u, v;
        if (!(fields >> u)) continue;  // blank line
        if (!(fields >> v))
            throw Error(ErrorKind::InvalidGraph,
                        "line " + std::to_string(lineno) + " must be 'u v', got '" + line + "'");
        if (fields >> extra)
            throw Error(ErrorKind::InvalidGraph, "trailing text on line " +
                                                     std::to_string(lineno) + ": '" + extra + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw Error(ErrorKind::InvalidGraph, "empty graph file");
    return LabeledGraph::from_edges(n, std::move(edges));
}

std::string graph_to_text(const LabeledGraph& g) {
    std::string out = std::to_string(g.n) + "\n";
    for (auto [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

// Shared state for the chord-insertion backtracking. Vertices are placed in
// index order; the word is linear with the first endpoint of vertex 0 pinned
// at position 0, which quotients away rotations of the final circle.
struct Realizer {
    const LabeledGraph& g;
    std::vector<int> word;  // vertex id per position
    const std::function<bool(const std::vector<int>&)>& emit;
    bool stopped = false;

    explicit Realizer(const LabeledGraph& graph,
                      const std::function<bool(const std::vector<int>&)>& emit_fn)
        : g(graph), emit(emit_fn) {}

    // Interlacement of the just-placed vertex k against every earlier vertex
    // must match the requested adjacency.
    bool placement_consistent(int k) const {
        const int len = static_cast<int>(word.size());
        std::vector<std::pair<int, int>> pos(static_cast<size_t>(k) + 1, {-1, -1});
        for (int p = 0; p < len; ++p) {
            auto& pr = pos[static_cast<size_t>(word[static_cast<size_t>(p)])];
            (pr.first < 0 ? pr.first : pr.second) = p;
        }
        auto [a1, a2] = pos[static_cast<size_t>(k)];
        for (int j = 0; j < k; ++j) {
            auto [b1, b2] = pos[static_cast<size_t>(j)];
            bool cross = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
            if (cross != g.adjacent(k, j)) return false;
        }
        return true;
    }

    void place(int k) {
        if (stopped) return;
        if (k == g.n) {
            if (emit(word)) stopped = true;
            return;
        }
        if (k == 0) {
            word = {0, 0};
            if (g.n == 1 || placement_consistent(0)) place(1);
            word.clear();
            return;
        }
        const int len = static_cast<int>(word.size());
        // Insert the two endpoints at positions p1 < p2 of the grown word;
        // position 0 stays pinned.
        for (int p1 = 1; p1 <= len && !stopped; ++p1)
            for (int p2 = p1 + 1; p2 <= len + 1 && !stopped; ++p2) {
                std::vector<int> grown;
                grown.reserve(static_cast<size_t>(len) + 2);
                for (int p = 0; p < len + 2; ++p) {
                    if (p == p1 || p == p2)
                        grown.push_back(k);
                    else
                        grown.push_back(word[static_cast<size_t>(p - (p > p1) - (p > p2))]);
                }
                std::swap(word, grown);
                if (placement_consistent(k)) place(k + 1);
                std::swap(word, grown);
            }
    }
};

void check_realize_bound(const LabeledGraph& g, int bound) {
    if (g.n > bound)
        throw Error(ErrorKind::DimensionTooLarge,
                    "realization search on " + std::to_string(g.n) + " vertices exceeds bound " +
                        std::to_string(bound));
}

Hieroglyph word_to_hieroglyph(const std::vector<int>& word) {
    std::vector<int> newid(word.size(), -1);
    std::vector<std::string> names;
    std::vector<int> code;
    code.reserve(word.size());
    int next = 0;
    for (int v : word) {
        if (newid[static_cast<size_t>(v)] < 0) {
            newid[static_cast<size_t>(v)] = next++;
            names.push_back(std::to_string(v));
        }
        code.push_back(newid[static_cast<size_t>(v)]);
    }
    return Hieroglyph(std::move(code), std::move(names));
}

// Least rotation/reflection image of the labeled position sequence; labels
// are NOT renamed, so this keys words with vertex identities kept.
std::vector<int> labeled_cyclic_key(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    std::vector<int> best = word;
    std::vector<int> cand(static_cast<size_t>(len));
    for (int dir = 0; dir < 2; ++dir)
        for (int rot = 0; rot < len; ++rot) {
            for (int k = 0; k < len; ++k) {
                int p = dir == 0 ? (rot + k) % len : (rot - k + len) % len;
                cand[static_cast<size_t>(k)] = word[static_cast<size_t>(p)];
            }
            if (cand < best) best = cand;
        }
    return best;
}

}  // namespace

std::optional<Hieroglyph> realize_graph(const LabeledGraph& g, int bound) {
    check_realize_bound(g, bound);
    if (g.n == 0) return Hieroglyph();
    std::optional<Hieroglyph> found;
    std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& word) {
        found = word_to_hieroglyph(word);
        return true;
    };
    Realizer r(g, emit);
    r.place(0);
    if (found) {
        // Paranoia: the witness must reproduce the requested graph exactly.
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                if (interlaces(*found, std::to_string(u), std::to_string(v)) != g.adjacent(u, v))
                    throw std::logic_error("realization witness does not match the graph");
    }
    return found;
}

long long count_realizations(const LabeledGraph& g, int bound) {
    check_realize_bound(g, bound);
    if (g.n == 0) return 1;
    std::set<std::vector<int>> keys;
    std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& word) {
        keys.insert(labeled_cyclic_key(word));
        return false;
    };
    Realizer r(g, emit);
    r.place(0);
    return static_cast<long long>(keys.size());
}

namespace {

// Masks are compared bit 0 first (the (0,1) pair), so the subgraph on the
// low vertices decides before any edge of a later vertex: removing the last
// vertex of a least mask leaves a least mask, which is what lets the orderly
// generation extend canonical graphs only.
bool mask_lex_less(uint64_t a, uint64_t b) {
    uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (b & (diff & -diff)) != 0;
}

uint64_t permuted_mask(const LabeledGraph& g, const std::vector<int>& perm) {
    uint64_t mask = 0;
    for (auto [u, v] : g.edges) {
        int a = perm[static_cast<size_t>(u)];
        int b = perm[static_cast<size_t>(v)];
        if (a > b) std::swap(a, b);
        mask |= 1ull << (b * (b - 1) / 2 + a);
    }
    return mask;
}

LabeledGraph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (mask >> (v * (v - 1) / 2 + u) & 1ull) edges.emplace_back(u, v);
    return LabeledGraph::from_edges(n, std::move(edges));
}

}  // namespace

uint64_t graph_canonical_mask(const LabeledGraph& g) {
    if (g.n > 11)
        throw Error(ErrorKind::DimensionTooLarge,
                    "canonical mask needs n <= 11, got " + std::to_string(g.n));
    std::vector<int> perm(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[static_cast<size_t>(i)] = i;
    uint64_t best = g.edge_mask();
    while (std::next_permutation(perm.begin(), perm.end())) {
        uint64_t m = permuted_mask(g, perm);
        if (mask_lex_less(m, best)) best = m;
    }
    return best;
}

std::vector<LabeledGraph> all_graphs_up_to_iso(int n, int bound) {
    if (n < 0) throw Error(ErrorKind::BadArgument, "negative vertex count");
    if (n > bound)
        throw Error(ErrorKind::DimensionTooLarge,
                    "graph enumeration on " + std::to_string(n) + " vertices exceeds bound " +
                        std::to_string(bound));
    std::vector<LabeledGraph> out;
    if (n == 0) {
        out.push_back(LabeledGraph{0, {}});
        return out;
    }

    // Orderly generation: grow canonical masks one vertex at a time. The
    // deletion of the last vertex of a lexicographically least mask is again
    // least (its bits are the low-order prefix), so every canonical graph on
    // k vertices appears as an extension of one on k - 1.
    std::vector<uint64_t> level = {0};  // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        std::vector<uint64_t> next;
        const int base = (k - 1) * (k - 2) / 2;
        std::vector<int> perm(static_cast<size_t>(k));
        for (uint64_t parent : level)
            for (uint64_t attach = 0; attach < (1ull << (k - 1)); ++attach) {
                uint64_t mask = parent | attach << base;
                LabeledGraph g = graph_from_mask(k, mask);
                for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
                bool canonical = true;
                while (std::next_permutation(perm.begin(), perm.end()))
                    if (mask_lex_less(permuted_mask(g, perm), mask)) {
                        canonical = false;
                        break;
                    }
                if (canonical) next.push_back(mask);
            }
        std::sort(next.begin(), next.end(), mask_lex_less);
        level = std::move(next);
    }

    out.reserve(level.size());
    for (uint64_t mask : level) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<LabeledGraph> find_nonrealizable(int n, int bound) {
    std::vector<LabeledGraph> out;
    for (const LabeledGraph& g : all_graphs_up_to_iso(n, bound))
        if (!realize_graph(g, std::max(n, kDefaultRealizeBound))) out.push_back(g);
    return out;
}

}  // namespace hiero
