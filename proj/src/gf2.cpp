#include "hiero/gf2.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hiero {

namespace {

// In-place Gaussian elimination on packed rows; returns the rank.
int eliminate(uint64_t* rows, int nrows, int ncols, int wpr) {
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        const int word = col >> 6;
        const uint64_t bit = 1ull << (col & 63);
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[static_cast<size_t>(r) * wpr + word] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int w = 0; w < wpr; ++w)
                std::swap(rows[static_cast<size_t>(pivot) * wpr + w],
                          rows[static_cast<size_t>(rank) * wpr + w]);
        for (int r = rank + 1; r < nrows; ++r)
            if (rows[static_cast<size_t>(r) * wpr + word] & bit)
                for (int w = word; w < wpr; ++w)
                    rows[static_cast<size_t>(r) * wpr + w] ^=
                        rows[static_cast<size_t>(rank) * wpr + w];
        ++rank;
    }
    return rank;
}

}  // namespace

SymMatrixGF2::SymMatrixGF2(int n) : n_(n), wpr_(n == 0 ? 1 : (n + 63) / 64) {
    if (n < 0) throw Error(ErrorKind::InvalidMatrix, "negative matrix dimension");
    bits_.assign(static_cast<size_t>(n_) * wpr_, 0);
}

SymMatrixGF2 SymMatrixGF2::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw Error(ErrorKind::InvalidMatrix,
                        "matrix must be square: " + std::to_string(n) + " rows but row " +
                            std::to_string(i) + " has " +
                            std::to_string(rows[static_cast<size_t>(i)].size()) + " entries");
    SymMatrixGF2 m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v != 0 && v != 1)
                throw Error(ErrorKind::InvalidMatrix, "matrix entries must be 0 or 1, got " +
                                                          std::to_string(v) + " at (" +
                                                          std::to_string(i) + ", " +
                                                          std::to_string(j) + ")");
            if (rows[static_cast<size_t>(j)][static_cast<size_t>(i)] != v)
                throw Error(ErrorKind::InvalidMatrix, "matrix is not symmetric at (" +
                                                          std::to_string(i) + ", " +
                                                          std::to_string(j) + ")");
            if (v) m.set(i, j, true);
        }
    return m;
}

void SymMatrixGF2::set(int i, int j, bool v) {
    auto flip = [&](int r, int c) {
        uint64_t& w = bits_[static_cast<size_t>(r) * wpr_ + (c >> 6)];
        if (v)
            w |= 1ull << (c & 63);
        else
            w &= ~(1ull << (c & 63));
    };
    flip(i, j);
    if (i != j) flip(j, i);
}

void SymMatrixGF2::set_diagonal(const std::vector<uint8_t>& diag) {
    if (static_cast<int>(diag.size()) != n_)
        throw Error(ErrorKind::BadArgument, "diagonal length does not match dimension");
    for (int i = 0; i < n_; ++i) set(i, i, diag[static_cast<size_t>(i)] != 0);
}

std::vector<uint8_t> SymMatrixGF2::diagonal() const {
    std::vector<uint8_t> d(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) d[static_cast<size_t>(i)] = get(i, i) ? 1 : 0;
    return d;
}

bool SymMatrixGF2::off_diagonal_zero() const {
    for (int i = 0; i < n_; ++i) {
        const uint64_t* r = row(i);
        for (int w = 0; w < wpr_; ++w) {
            uint64_t mask = r[w];
            if ((i >> 6) == w) mask &= ~(1ull << (i & 63));
            if (mask) return false;
        }
    }
    return true;
}

std::string SymMatrixGF2::to_text() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out.push_back(' ');
            out.push_back(get(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

SymMatrixGF2 SymMatrixGF2::parse_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<int> row;
        std::string tok;
        while (fields >> tok) {
            if (tok == "0")
                row.push_back(0);
            else if (tok == "1")
                row.push_back(1);
            else
                throw Error(ErrorKind::InvalidMatrix, "matrix entries must be 0 or 1, got '" +
                                                          tok + "' in row " +
                                                          std::to_string(rows.size()));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_rows(rows);
}

int rank_gf2_rows(std::vector<uint64_t> rows, int nrows, int ncols) {
    if (nrows == 0 || ncols == 0) return 0;
    const int wpr = (ncols + 63) / 64;
    return eliminate(rows.data(), nrows, ncols, wpr);
}

int rank_gf2(const SymMatrixGF2& m) {
    const int n = m.dim();
    if (n == 0) return 0;
    std::vector<uint64_t> rows(m.row(0), m.row(0) + static_cast<size_t>(n) * m.words_per_row());
    return eliminate(rows.data(), n, n, m.words_per_row());
}

std::optional<std::vector<uint8_t>> rank_le1_with_diagonal(const SymMatrixGF2& m) {
    const int n = m.dim();
    std::vector<int> degree(static_cast<size_t>(n), 0);
    int non_isolated = 0;
    for (int i = 0; i < n; ++i) {
        int d = 0;
        const uint64_t* r = m.row(i);
        for (int w = 0; w < m.words_per_row(); ++w) {
            uint64_t mask = r[w];
            if ((i >> 6) == w) mask &= ~(1ull << (i & 63));
            d += __builtin_popcountll(mask);
        }
        degree[static_cast<size_t>(i)] = d;
        if (d > 0) ++non_isolated;
    }
    // Clique plus isolated vertices: every vertex that has a neighbor must be
    // adjacent to all other such vertices.
    for (int i = 0; i < n; ++i)
        if (degree[static_cast<size_t>(i)] != 0 &&
            degree[static_cast<size_t>(i)] != non_isolated - 1)
            return std::nullopt;
    std::vector<uint8_t> diag(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        if (degree[static_cast<size_t>(i)] > 0) diag[static_cast<size_t>(i)] = 1;
    return diag;
}

std::optional<BlockForm> block_form(const SymMatrixGF2& m) {
    auto diag = rank_le1_with_diagonal(m);
    if (!diag) return std::nullopt;
    const int n = m.dim();
    BlockForm form;
    form.permutation.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        if ((*diag)[static_cast<size_t>(i)]) form.permutation.push_back(i);
    form.block_size = static_cast<int>(form.permutation.size());
    for (int i = 0; i < n; ++i)
        if (!(*diag)[static_cast<size_t>(i)]) form.permutation.push_back(i);
    form.diagonal.assign(static_cast<size_t>(n), 0);
    for (int k = 0; k < form.block_size; ++k) form.diagonal[static_cast<size_t>(k)] = 1;
    return form;
}

std::optional<PQWitness> find_pq_witness(const SymMatrixGF2& m) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                bool ij = m.get(i, j), ik = m.get(i, k), jk = m.get(j, k);
                if (ij && ik && !jk) return PQWitness{PQWitness::Kind::P, {i, j, k}};
                if (ij && jk && !ik) return PQWitness{PQWitness::Kind::P, {j, i, k}};
                if (ik && jk && !ij) return PQWitness{PQWitness::Kind::P, {k, i, j}};
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    bool ij = m.get(i, j), ik = m.get(i, k), il = m.get(i, l);
                    bool jk = m.get(j, k), jl = m.get(j, l), kl = m.get(k, l);
                    if (ij && kl && !ik && !il && !jk && !jl)
                        return PQWitness{PQWitness::Kind::Q, {i, j, k, l}};
                    if (ik && jl && !ij && !il && !jk && !kl)
                        return PQWitness{PQWitness::Kind::Q, {i, k, j, l}};
                    if (il && jk && !ij && !ik && !jl && !kl)
                        return PQWitness{PQWitness::Kind::Q, {i, l, j, k}};
                }
    return std::nullopt;
}

namespace {

// Rank of the matrix after writing diagonal t (bit n-1-i of t is entry i)
// over the zero-diagonal base rows; `work` is caller-provided scratch.
int rank_with_diagonal_bits(const std::vector<uint64_t>& base, int n, int wpr, uint64_t t,
                            std::vector<uint64_t>& work) {
    work.assign(base.begin(), base.end());
    for (int i = 0; i < n; ++i)
        if ((t >> (n - 1 - i)) & 1ull)
            work[static_cast<size_t>(i) * wpr + (i >> 6)] |= 1ull << (i & 63);
    return eliminate(work.data(), n, n, wpr);
}

}  // namespace

MinRankResult min_rank_over_diagonal(const SymMatrixGF2& m, Exec exec, int bound) {
    const int n = m.dim();
    if (n > bound)
        throw Error(ErrorKind::DimensionTooLarge,
                    "diagonal sweep over 2^" + std::to_string(n) +
                        " settings refused: dimension " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
    if (auto diag = rank_le1_with_diagonal(m)) {
        int rank = 0;
        for (uint8_t v : *diag)
            if (v) rank = 1;
        return MinRankResult{rank, std::move(*diag)};
    }
    if (n > 62)
        throw Error(ErrorKind::DimensionTooLarge,
                    "diagonal sweep over 2^" + std::to_string(n) + " settings is not tractable");

    // No diagonal reaches rank <= 1, so the first setting that reaches rank 2
    // is final. Ascending order over the packed integer is lexicographic
    // order over the diagonal vector, which fixes the reported witness.
    const int wpr = m.words_per_row();
    std::vector<uint64_t> base(m.row(0), m.row(0) + static_cast<size_t>(n) * wpr);
    for (int i = 0; i < n; ++i)
        base[static_cast<size_t>(i) * wpr + (i >> 6)] &= ~(1ull << (i & 63));

    const uint64_t total = 1ull << n;
    int best_rank = INT_MAX;
    uint64_t best_t = 0;
    const uint64_t chunk = 1ull << 13;
    for (uint64_t lo = 0; lo < total; lo += chunk) {
        const uint64_t hi = std::min(total, lo + chunk);
#ifdef _OPENMP
        if (exec == Exec::Parallel) {
#pragma omp parallel
            {
                int local_rank = INT_MAX;
                uint64_t local_t = 0;
                std::vector<uint64_t> work;
#pragma omp for nowait schedule(static)
                for (int64_t t = static_cast<int64_t>(lo); t < static_cast<int64_t>(hi); ++t) {
                    int r = rank_with_diagonal_bits(base, n, wpr,
                                                    static_cast<uint64_t>(t), work);
                    if (r < local_rank) {
                        local_rank = r;
                        local_t = static_cast<uint64_t>(t);
                    }
                }
#pragma omp critical
                {
                    if (local_rank < best_rank ||
                        (local_rank == best_rank && local_t < best_t)) {
                        best_rank = local_rank;
                        best_t = local_t;
                    }
                }
            }
        } else
#endif
        {
            (void)exec;
            std::vector<uint64_t> work;
            for (uint64_t t = lo; t < hi; ++t) {
                int r = rank_with_diagonal_bits(base, n, wpr, t, work);
                if (r < best_rank) {
                    best_rank = r;
                    best_t = t;
                }
            }
        }
        if (best_rank <= 2) break;
    }

    MinRankResult result;
    result.rank = best_rank;
    result.diagonal.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        result.diagonal[static_cast<size_t>(i)] = (best_t >> (n - 1 - i)) & 1ull ? 1 : 0;
    return result;
}

}  // namespace hiero
