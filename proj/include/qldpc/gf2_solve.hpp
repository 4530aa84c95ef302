#pragma once

#include <optional>

#include "qldpc/gf2.hpp"

namespace qldpc {

/// GF(2) rank via Gaussian elimination on a dense working copy.
std::size_t rank(const BitMatrix& A);

/// Greedy left-to-right selection of rank(A) independent columns, scanned in
/// the supplied column order. Output preserves the relative order of
/// column_order and always has length rank(A).
std::vector<std::size_t> pivot_columns(const BitMatrix& A,
                                       std::span<const std::size_t> column_order);

/// Basis of the nullspace: cols(A) - rank(A) independent vectors v with Av = 0.
std::vector<BitVector> kernel_basis(const BitMatrix& A);

/// True iff v is a GF(2) combination of the rows of A.
bool in_row_space(const BitMatrix& A, const BitVector& v);

/// Cached elimination of A restricted to a set of independent columns.
/// Solves A_[basis] x = s for many right-hand sides off one factorization.
class ColumnSolver {
public:
    /// Throws std::invalid_argument if the basis columns are dependent.
    ColumnSolver(const BitMatrix& A, std::vector<std::size_t> basis);

    std::size_t basis_size() const { return basis_.size(); }
    const std::vector<std::size_t>& basis() const { return basis_; }

    /// Coefficients over the basis columns, in basis order, or nullopt when
    /// s is outside the span of the basis columns.
    std::optional<BitVector> solve(const BitVector& s) const;

private:
    std::vector<std::size_t> basis_;
    std::size_t m_;
    gf2::PackedMatrix transform_;          // row-op matrix E with E A_[basis] = (I; 0)
    std::vector<std::size_t> pivot_rows_;  // rows of E producing each solution bit
};

/// One-shot wrapper over ColumnSolver matching the rest of the free-function API.
std::optional<BitVector> solve_on_columns(const BitMatrix& A,
                                          const std::vector<std::size_t>& basis,
                                          const BitVector& s);

namespace gf2 {

/// In-place reduced row echelon form. Returns pivot column positions
/// (ascending); after the call row i holds the pivot for pivot_cols[i].
/// Pivots are only sought in columns < col_limit (row ops still span the
/// whole row, so augmented columns ride along untouched as pivots).
std::vector<std::size_t> rref_in_place(PackedMatrix& mat, std::size_t col_limit);
std::vector<std::size_t> rref_in_place(PackedMatrix& mat);

/// Incrementally built row-echelon basis of packed vectors. Supports rank
/// growth tests and fast repeated span-membership queries.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ncols)
        : ncols_(ncols), words_(ncols == 0 ? 1 : (ncols + 63) / 64) {}

    static EchelonBasis from_rows(const BitMatrix& A);

    /// Reduce v against the basis; if a nonzero remainder survives, absorb it
    /// and return true. Returns false when v already lies in the span.
    bool add(std::vector<std::uint64_t> v);
    bool add(const BitVector& v);

    bool contains(const BitVector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return ncols_; }

private:
    std::size_t reduce(std::vector<std::uint64_t>& v) const;  // returns pivot or SIZE_MAX

    std::size_t ncols_, words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

/// Pack a sparse vector into words for fast dot products.
std::vector<std::uint64_t> pack_vector(const BitVector& v);

bool packed_dot(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

}  // namespace gf2
}  // namespace qldpc
