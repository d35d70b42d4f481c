#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "diffposet/rat.hpp"

namespace diffposet {

/// Exact rational vector over the standard basis of one rank.
struct RatVector {
    int rank = -1;
    std::vector<Rat> entries;

    std::size_t size() const { return entries.size(); }
    const Rat& operator[](std::size_t i) const { return entries[i]; }
    Rat& operator[](std::size_t i) { return entries[i]; }

    friend bool operator==(const RatVector& a, const RatVector& b) {
        return a.entries == b.entries;
    }
};

/// Standard-basis inner product.
Rat dot(const RatVector& a, const RatVector& b);

/// Exact rational matrix mapping rank `domain_rank` to rank `codomain_rank`
/// (rank tags are optional metadata; -1 when detached, e.g. submatrices).
/// Storage is dense row-major or sparse rows, chosen at construction:
/// the up/down operators are sparse, projections and inverses dense.
class RatMatrix {
public:
    using SparseRow = std::vector<std::pair<std::uint32_t, Rat>>;  // sorted by column

    RatMatrix() = default;

    static RatMatrix dense(std::size_t rows, std::size_t cols);
    static RatMatrix sparse(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    bool is_sparse() const { return sparse_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    int domain_rank = -1;
    int codomain_rank = -1;

    /// Entry accessor; works for both storage modes (sparse lookup is a
    /// binary search over the row).
    const Rat& at(std::size_t r, std::size_t c) const;

    /// Dense-mode direct write. For sparse matrices entries must be appended
    /// in column order per row via push_sparse.
    void set(std::size_t r, std::size_t c, Rat v);
    void push_sparse(std::size_t r, std::uint32_t c, Rat v);

    /// Mutable dense-mode entry, for in-place assembly and elimination.
    Rat& ref(std::size_t r, std::size_t c);

    const SparseRow& sparse_row(std::size_t r) const { return srows_[r]; }

    RatMatrix to_dense() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    bool sparse_ = false;
    std::vector<Rat> dense_;              // row-major, when !sparse_
    std::vector<SparseRow> srows_;        // when sparse_

    friend RatMatrix multiply(const RatMatrix&, const RatMatrix&);
    friend RatMatrix transpose(const RatMatrix&);
};

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix subtract(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const RatMatrix& m, const Rat& s);
Rat trace(const RatMatrix& m);
bool is_symmetric(const RatMatrix& m);

/// Exact determinant by Gaussian elimination over the rationals; pivots on
/// the first nonzero entry of each column (deterministic), row swaps tracked.
Rat determinant(const RatMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error on a
/// singular matrix.
RatMatrix invert(const RatMatrix& m);

/// Exact rank by sparse elimination. Pivot rule: the active row with the
/// fewest nonzeros (smallest row index on ties), pivoting on its smallest
/// column. Pivot order cannot change the result; the rule keeps incidence
/// matrices from filling in.
std::size_t matrix_rank(const RatMatrix& m);

}  // namespace diffposet
