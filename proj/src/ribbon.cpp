#include "hiero/ribbon.hpp"

#include <algorithm>

namespace hiero {

RibbonDisk::RibbonDisk(Hieroglyph b, std::vector<uint8_t> t)
    : base(std::move(b)), twists(std::move(t)) {
    if (static_cast<int>(twists.size()) != base.letters())
        throw Error(ErrorKind::BadArgument,
                    "twist vector length " + std::to_string(twists.size()) +
                        " does not match letter count " + std::to_string(base.letters()));
    for (uint8_t v : twists)
        if (v != 0 && v != 1)
            throw Error(ErrorKind::BadArgument, "twist entries must be 0 or 1");
}

SymMatrixGF2 crossing_matrix(const RibbonDisk& d) {
    SymMatrixGF2 m = interlacement_matrix(d.base);
    m.set_diagonal(d.twists);
    return m;
}

int min_mobius_bands(const RibbonDisk& d) { return rank_gf2(crossing_matrix(d)); }

OracleResult oracle_weak_realizability(const Hieroglyph& h, Exec exec, int bound) {
    const int n = h.letters();
    if (n > bound)
        throw Error(ErrorKind::DimensionTooLarge,
                    "twist sweep over 2^" + std::to_string(n) + " vectors refused: " +
                        std::to_string(n) + " letters exceeds bound " + std::to_string(bound));
    const SymMatrixGF2 inter = interlacement_matrix(h);
    const int wpr = inter.words_per_row();
    std::vector<uint64_t> base;
    if (n > 0) base.assign(inter.row(0), inter.row(0) + static_cast<size_t>(n) * wpr);

    auto rank_le1_at = [&](uint64_t t) {
        std::vector<uint64_t> work(base);
        for (int i = 0; i < n; ++i)
            if ((t >> (n - 1 - i)) & 1ull)
                work[static_cast<size_t>(i) * wpr + (i >> 6)] |= 1ull << (i & 63);
        return rank_gf2_rows(std::move(work), n, n) <= 1;
    };

    const uint64_t total = 1ull << n;
    const uint64_t none = ~0ull;
    uint64_t hit = none;
    const uint64_t chunk = 1ull << 13;
    for (uint64_t lo = 0; lo < total && hit == none; lo += chunk) {
        const uint64_t hi = std::min(total, lo + chunk);
        uint64_t local_min = none;
#ifdef _OPENMP
        if (exec == Exec::Parallel) {
#pragma omp parallel
            {
                uint64_t mine = none;
#pragma omp for nowait schedule(static)
                for (int64_t t = static_cast<int64_t>(lo); t < static_cast<int64_t>(hi); ++t)
                    if (mine == none && rank_le1_at(static_cast<uint64_t>(t)))
                        mine = static_cast<uint64_t>(t);
#pragma omp critical
                if (mine < local_min) local_min = mine;
            }
        } else
#endif
        {
            (void)exec;
            for (uint64_t t = lo; t < hi; ++t)
                if (rank_le1_at(t)) {
                    local_min = t;
                    break;
                }
        }
        hit = local_min;
    }

    OracleResult result;
    if (hit == none) return result;
    result.realizable = true;
    std::vector<uint8_t> twists(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        twists[static_cast<size_t>(i)] = (hit >> (n - 1 - i)) & 1ull ? 1 : 0;
    result.twists = std::move(twists);
    return result;
}

bool realizable_on_m_bands(const Hieroglyph& h, int m, Exec exec, int bound) {
    if (m < 0) throw Error(ErrorKind::BadArgument, "band count must be nonnegative");
    return min_rank_over_diagonal(interlacement_matrix(h), exec, bound).rank <= m;
}

SurfaceSummary surface_summary(const RibbonDisk& d) {
    const int n = d.base.letters();
    SurfaceSummary s;
    s.euler_characteristic = 1 - n;
    for (uint8_t t : d.twists)
        if (t) s.orientable = false;
    if (n == 0) return s;

    // Endpoints around the circle: arc j in circle position j contributes
    // left endpoint 2j and right endpoint 2j + 1.
    const int arcs = 2 * n;
    const int pts = 2 * arcs;
    std::vector<int> gap(static_cast<size_t>(pts));
    std::vector<int> band(static_cast<size_t>(pts));
    for (int j = 0; j < arcs; ++j) {
        int right = 2 * j + 1;
        int next_left = 2 * ((j + 1) % arcs);
        gap[static_cast<size_t>(right)] = next_left;
        gap[static_cast<size_t>(next_left)] = right;
    }
    for (int letter = 0; letter < n; ++letter) {
        auto [p, q] = d.base.occurrences(letter);
        int lp = 2 * p, rp = 2 * p + 1, lq = 2 * q, rq = 2 * q + 1;
        if (d.twists[static_cast<size_t>(letter)]) {
            band[static_cast<size_t>(lp)] = lq;
            band[static_cast<size_t>(lq)] = lp;
            band[static_cast<size_t>(rp)] = rq;
            band[static_cast<size_t>(rq)] = rp;
        } else {
            band[static_cast<size_t>(lp)] = rq;
            band[static_cast<size_t>(rq)] = lp;
            band[static_cast<size_t>(rp)] = lq;
            band[static_cast<size_t>(lq)] = rp;
        }
    }

    // Every endpoint lies on one gap edge and one band edge, so the union is
    // a disjoint set of alternating cycles: the boundary circles.
    std::vector<uint8_t> seen(static_cast<size_t>(pts), 0);
    int components = 0;
    for (int start = 0; start < pts; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++components;
        int at = start;
        bool take_gap = true;
        while (!seen[static_cast<size_t>(at)]) {
            seen[static_cast<size_t>(at)] = 1;
            at = take_gap ? gap[static_cast<size_t>(at)] : band[static_cast<size_t>(at)];
            take_gap = !take_gap;
        }
    }
    s.boundary_components = components;
    return s;
}

}  // namespace hiero
