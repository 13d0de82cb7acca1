#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiero/errors.hpp"
#include "hiero/parallel.hpp"

namespace hiero {

// Symmetric 0/1 matrix over GF(2) with a distinguished diagonal.
// Rows are packed into 64-bit words so elimination runs on whole words.
class SymMatrixGF2 {
public:
    SymMatrixGF2() = default;
    explicit SymMatrixGF2(int n);

    // Validates shape, 0/1 entries and symmetry (InvalidMatrix otherwise).
    static SymMatrixGF2 from_rows(const std::vector<std::vector<int>>& rows);

    int dim() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool get(int i, int j) const {
        return (bits_[static_cast<size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    // Sets both (i,j) and (j,i).
    void set(int i, int j, bool v);

    const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * wpr_; }

    void set_diagonal(const std::vector<uint8_t>& diag);
    std::vector<uint8_t> diagonal() const;
    bool off_diagonal_zero() const;

    bool operator==(const SymMatrixGF2& other) const = default;

    // One row per line, entries 0/1 separated by single spaces.
    std::string to_text() const;
    static SymMatrixGF2 parse_text(const std::string& text);

private:
    int n_ = 0;
    int wpr_ = 0;
    std::vector<uint64_t> bits_;
};

// Off-diagonal pattern witness: a principal 3x3 submatrix where one index
// meets the other two but those two miss each other, or a 4x4 submatrix made
// of two 1-pairs with all four cross entries zero. Diagonal entries are
// ignored by the match.
struct PQWitness {
    enum class Kind { P, Q };
    Kind kind;
    // P: (center, u, v) with M[center][u] = M[center][v] = 1, M[u][v] = 0.
    // Q: (i, j, k, l) with M[i][j] = M[k][l] = 1 and the four cross entries 0.
    std::vector<int> indices;
};

// Witness that after one simultaneous row/column permutation and a diagonal
// rewrite the matrix becomes an all-ones top-left block with zeros outside.
struct BlockForm {
    std::vector<int> permutation;   // new position -> original index
    std::vector<uint8_t> diagonal;  // in permuted coordinates: 1^k 0^(n-k)
    int block_size = 0;
};

struct MinRankResult {
    int rank = 0;
    std::vector<uint8_t> diagonal;  // one diagonal achieving the minimum
};

inline constexpr int kDefaultSweepBound = 20;

// Row-space dimension over GF(2).
int rank_gf2(const SymMatrixGF2& m);

// Same, for an arbitrary packed 0/1 matrix (consumed by elimination).
int rank_gf2_rows(std::vector<uint64_t> rows, int nrows, int ncols);

// Minimum rank over all 2^n diagonal rewrites, with one achieving diagonal
// (ties broken by the lexicographically least diagonal vector). Structural
// fast paths decide rank 0 and rank <= 1 before the exhaustive sweep.
// Throws DimensionTooLarge when n exceeds `bound`: no fast general algorithm
// is known, so anything past desk scale is refused rather than approximated.
MinRankResult min_rank_over_diagonal(const SymMatrixGF2& m, Exec exec = Exec::Parallel,
                                     int bound = kDefaultSweepBound);

// A diagonal making the rank <= 1, when one exists. O(n^2): such a diagonal
// exists iff the off-diagonal support is a clique plus isolated vertices,
// and then the clique indicator is the unique choice (all-zero if no edges).
std::optional<std::vector<uint8_t>> rank_le1_with_diagonal(const SymMatrixGF2& m);

// First P witness over all 3-subsets in lexicographic order, then first Q
// witness over all 4-subsets; std::nullopt when neither pattern embeds.
std::optional<PQWitness> find_pq_witness(const SymMatrixGF2& m);

// Nonempty iff the off-diagonal support is a clique plus isolated vertices;
// the permutation lists clique members first, each in ascending order.
std::optional<BlockForm> block_form(const SymMatrixGF2& m);

}  // namespace hiero
