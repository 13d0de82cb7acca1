#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hiero/gf2.hpp"
#include "hiero/hieroglyph.hpp"
#include "hiero/parallel.hpp"

namespace hiero {

// A hieroglyph plus one twist bit per letter (1 = half-twisted band,
// counted mod 2). Twist index i refers to letter i (first-occurrence order).
struct RibbonDisk {
    Hieroglyph base;
    std::vector<uint8_t> twists;

    RibbonDisk(Hieroglyph b, std::vector<uint8_t> t);
};

// Twists on the diagonal, interlacement off the diagonal.
SymMatrixGF2 crossing_matrix(const RibbonDisk& d);

// Least m such that the disk cuts out of a disk with m Mobius bands:
// the GF(2) rank of the crossing matrix.
int min_mobius_bands(const RibbonDisk& d);

struct OracleResult {
    bool realizable = false;
    std::optional<std::vector<uint8_t>> twists;  // lexicographically least hit
};

// Ground-truth brute force: sweeps all 2^n twist vectors and reports whether
// any crossing matrix has rank <= 1. Independent of the quadratic checker by
// construction; the two are compared exhaustively in the tests.
OracleResult oracle_weak_realizability(const Hieroglyph& h, Exec exec = Exec::Parallel,
                                       int bound = kDefaultSweepBound);

// True iff some twisting cuts out of a disk with m Mobius bands, i.e. the
// minimum rank over free diagonals is at most m.
bool realizable_on_m_bands(const Hieroglyph& h, int m, Exec exec = Exec::Parallel,
                           int bound = kDefaultSweepBound);

struct SurfaceSummary {
    int euler_characteristic = 1;
    int boundary_components = 1;
    bool orientable = true;
};

// Classifies the band surface: chi = 1 - n by construction, orientable iff
// no band is twisted, boundary components by tracing the boundary walk.
// Each attachment arc has a left and a right endpoint in circle order; an
// untwisted band joins left-to-right across its two arcs, a twisted band
// left-to-left and right-to-right, and the gaps between consecutive arcs
// close the circle. The trace alternates gap and band-side edges.
SurfaceSummary surface_summary(const RibbonDisk& d);

}  // namespace hiero
