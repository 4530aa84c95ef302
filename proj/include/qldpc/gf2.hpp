#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qldpc {

/// Sparse binary vector: length plus the sorted list of positions holding a 1.
struct BitVector {
    std::size_t len = 0;
    std::vector<std::size_t> support;  // strictly increasing

    BitVector() = default;
    explicit BitVector(std::size_t n) : len(n) {}
    BitVector(std::size_t n, std::vector<std::size_t> ones);

    static BitVector zeros(std::size_t n) { return BitVector(n); }
    static BitVector from_bools(const std::vector<bool>& bits);

    std::size_t weight() const { return support.size(); }
    bool is_zero() const { return support.empty(); }
    bool get(std::size_t i) const;
    std::vector<bool> to_bools() const;

    friend bool operator==(const BitVector& a, const BitVector& b) = default;
};

BitVector xor_vec(const BitVector& a, const BitVector& b);

/// Sparse binary matrix stored as dual adjacency lists (rows and columns).
/// Immutable after construction; safe to share across threads.
class BitMatrix {
public:
    BitMatrix() = default;

    static BitMatrix from_entries(std::size_t rows, std::size_t cols,
                                  std::vector<std::pair<std::size_t, std::size_t>> entries);
    static BitMatrix from_rows(std::size_t cols, const std::vector<std::vector<std::size_t>>& rows);
    static BitMatrix from_dense(const std::vector<std::vector<int>>& dense);
    static BitMatrix identity(std::size_t n);
    static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return nnz_; }

    std::span<const std::size_t> row(std::size_t i) const { return by_row_[i]; }
    std::span<const std::size_t> col(std::size_t j) const { return by_col_[j]; }
    bool get(std::size_t i, std::size_t j) const;

    std::size_t row_weight(std::size_t i) const { return by_row_[i].size(); }
    std::size_t col_weight(std::size_t j) const { return by_col_[j].size(); }
    std::size_t max_row_weight() const;
    std::size_t max_col_weight() const;
    std::size_t min_col_weight() const;

    BitMatrix transpose() const;
    BitVector row_vector(std::size_t i) const;

    /// Entry set as (row, col) pairs in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> entries() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b);

private:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), by_row_(rows), by_col_(cols) {}

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nnz_ = 0;
    std::vector<std::vector<std::size_t>> by_row_;
    std::vector<std::vector<std::size_t>> by_col_;
};

/// y = A v over GF(2). Throws std::invalid_argument on dimension mismatch.
BitVector mat_vec(const BitMatrix& A, const BitVector& v);

/// Kronecker product over GF(2).
BitMatrix kron(const BitMatrix& A, const BitMatrix& B);

/// Horizontal concatenation [A | B]; row counts must match.
BitMatrix hstack(const BitMatrix& A, const BitMatrix& B);

/// Vertical concatenation; column counts must match.
BitMatrix vstack(const BitMatrix& A, const BitMatrix& B);

namespace gf2 {

/// Dense bit-packed matrix used as elimination scratch. Not part of the
/// interchange format; sparse BitMatrix is converted in at the call site.
class PackedMatrix {
public:
    PackedMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(cols == 0 ? 1 : (cols + 63) / 64),
          data_(rows * words_, 0) {}

    static PackedMatrix from_sparse(const BitMatrix& m);
    /// Columns permuted: packed column p holds sparse column column_order[p].
    static PackedMatrix from_sparse_permuted(const BitMatrix& m,
                                             std::span<const std::size_t> column_order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    std::uint64_t* row_words(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * words_; }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace gf2
}  // namespace qldpc
