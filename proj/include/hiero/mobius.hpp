#pragma once

#include <string>
#include <vector>

#include "hiero/hieroglyph.hpp"
#include "hiero/parallel.hpp"

namespace hiero {

// Outcome of the Mobius-band decision. Realizable: a red/blue coloring where
// every two red letters interlace and no blue letter interlaces anything.
// NotRealizable: 3 or 4 letters whose induced subdiagram is one of the two
// forbidden patterns.
struct Certificate {
    enum class Kind { Realizable, NotRealizable };
    enum class Pattern { abcacb, ababcdcd };

    Kind kind = Kind::Realizable;
    std::vector<std::string> red;
    std::vector<std::string> blue;
    std::vector<std::string> witness_letters;
    Pattern pattern = Pattern::abcacb;
};

const char* pattern_word(Certificate::Pattern p);

// Degree profile of the interlacement graph. The graph is a clique plus
// isolated vertices iff the edge count fills C(non_isolated, 2).
struct InterlacementProfile {
    std::vector<int> degree;
    long long edges = 0;
    int non_isolated = 0;

    bool clique_plus_isolated() const {
        return edges == static_cast<long long>(non_isolated) * (non_isolated - 1) / 2;
    }
};

// Full pairwise scan with no data-dependent exit, so the cost depends only
// on n. The parallel kernel recounts each pair from both rows to stay
// race-free.
InterlacementProfile interlacement_profile(const Hieroglyph& h, Exec exec = Exec::Parallel);

// Quadratic decision: true iff the interlacement graph is a clique
// (possibly empty) together with isolated vertices.
bool is_weakly_realizable(const Hieroglyph& h, Exec exec = Exec::Parallel);

// Decision plus evidence; the returned certificate is re-validated against
// the word before being returned. Negative witnesses are deterministic: the
// least pair of non-isolated letters that fail to interlace (first-occurrence
// index order), completed by the least letters that close a forbidden
// pattern around the pair.
Certificate certify(const Hieroglyph& h, Exec exec = Exec::Parallel);

// Re-checks a certificate from scratch against the word.
bool validate_certificate(const Hieroglyph& h, const Certificate& c);

// True iff no 3-subset of letters induces abcacb and no 4-subset induces
// ababcdcd (induced = delete all other letters, compare canonical forms).
// Subset scan, intended for small n.
bool check_condition4(const Hieroglyph& h);

struct ReduceResult {
    Hieroglyph core;
    std::vector<std::string> removed;
    bool is_canonical_clique = false;
};

// Deletes every letter that interlaces nothing (one batch reaches the fixed
// point: deletion never creates new isolated letters) and reports whether
// the remainder is the canonical clique word a1..am a1..am.
ReduceResult reduce_condition3(const Hieroglyph& h);

}  // namespace hiero
