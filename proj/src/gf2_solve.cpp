#include "qldpc/gf2_solve.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace qldpc {
namespace gf2 {

std::vector<std::size_t> rref_in_place(PackedMatrix& mat) {
    return rref_in_place(mat, mat.cols());
}

std::vector<std::size_t> rref_in_place(PackedMatrix& mat, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < col_limit && next_row < mat.rows(); ++c) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = next_row; r < mat.rows(); ++r) {
            if (mat.get(r, c)) { pivot = r; break; }
        }
        if (pivot == SIZE_MAX) continue;
        mat.swap_rows(pivot, next_row);
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            if (r != next_row && mat.get(r, c)) mat.xor_row_into(next_row, r);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

EchelonBasis EchelonBasis::from_rows(const BitMatrix& A) {
    EchelonBasis basis(A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r) basis.add(A.row_vector(r));
    return basis;
}

std::size_t EchelonBasis::reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((v[p / 64] >> (p % 64)) & 1u)
            for (std::size_t w = 0; w < words_; ++w) v[w] ^= rows_[i][w];
    }
    for (std::size_t w = 0; w < words_; ++w)
        if (v[w] != 0) return w * 64 + std::countr_zero(v[w]);
    return SIZE_MAX;
}

bool EchelonBasis::add(std::vector<std::uint64_t> v) {
    const std::size_t pivot = reduce(v);
    if (pivot == SIZE_MAX) return false;
    // Keep reduced form: clear the new pivot from existing rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if ((rows_[i][pivot / 64] >> (pivot % 64)) & 1u)
            for (std::size_t w = 0; w < words_; ++w) rows_[i][w] ^= v[w];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonBasis::add(const BitVector& v) {
    if (v.len != ncols_) throw std::invalid_argument("EchelonBasis: length mismatch");
    return add(pack_vector(v));
}

bool EchelonBasis::contains(const BitVector& v) const {
    if (v.len != ncols_) throw std::invalid_argument("EchelonBasis: length mismatch");
    auto packed = pack_vector(v);
    return reduce(packed) == SIZE_MAX;
}

std::vector<std::uint64_t> pack_vector(const BitVector& v) {
    std::vector<std::uint64_t> words(v.len == 0 ? 1 : (v.len + 63) / 64, 0);
    for (auto i : v.support) words[i / 64] |= std::uint64_t{1} << (i % 64);
    return words;
}

bool packed_dot(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words; ++w) acc ^= a[w] & b[w];
    return std::popcount(acc) % 2 == 1;
}

}  // namespace gf2

std::size_t rank(const BitMatrix& A) {
    auto packed = gf2::PackedMatrix::from_sparse(A);
    return gf2::rref_in_place(packed).size();
}

std::vector<std::size_t> pivot_columns(const BitMatrix& A,
                                       std::span<const std::size_t> column_order) {
    if (column_order.size() != A.cols())
        throw std::invalid_argument("pivot_columns: column_order is not a permutation");
    auto packed = gf2::PackedMatrix::from_sparse_permuted(A, column_order);
    auto pivots = gf2::rref_in_place(packed);
    std::vector<std::size_t> out;
    out.reserve(pivots.size());
    for (auto p : pivots) out.push_back(column_order[p]);
    return out;
}

std::vector<BitVector> kernel_basis(const BitMatrix& A) {
    auto packed = gf2::PackedMatrix::from_sparse(A);
    auto pivots = gf2::rref_in_place(packed);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (std::size_t free_col = 0; free_col < A.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector v(A.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (packed.get(i, free_col)) v.support.push_back(pivots[i]);
        v.support.push_back(free_col);
        std::sort(v.support.begin(), v.support.end());
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const BitMatrix& A, const BitVector& v) {
    if (A.cols() != v.len) throw std::invalid_argument("in_row_space: dimension mismatch");
    auto packed = gf2::PackedMatrix(A.rows() + 1, A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (auto c : A.row(r)) packed.set(r, c);
    for (auto c : v.support) packed.set(A.rows(), c);
    // Rank unchanged by appending v iff v already lies in the row space.
    return gf2::rref_in_place(packed).size() == rank(A);
}

ColumnSolver::ColumnSolver(const BitMatrix& A, std::vector<std::size_t> basis)
    : basis_(std::move(basis)), m_(A.rows()), transform_(A.rows(), A.rows()) {
    // Eliminate [A_[basis] | I_m]; the identity half accumulates the row ops.
    gf2::PackedMatrix aug(m_, basis_.size() + m_);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (basis_[j] >= A.cols()) throw std::invalid_argument("ColumnSolver: column out of range");
        for (auto r : A.col(basis_[j])) aug.set(r, j);
    }
    for (std::size_t r = 0; r < m_; ++r) aug.set(r, basis_.size() + r);

    auto pivots = gf2::rref_in_place(aug, basis_.size());
    if (pivots.size() != basis_.size())
        throw std::invalid_argument("ColumnSolver: basis columns are linearly dependent");

    for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = 0; c < m_; ++c)
            if (aug.get(r, basis_.size() + c)) transform_.set(r, c);
    pivot_rows_.resize(basis_.size());
    std::iota(pivot_rows_.begin(), pivot_rows_.end(), std::size_t{0});
}

std::optional<BitVector> ColumnSolver::solve(const BitVector& s) const {
    if (s.len != m_) throw std::invalid_argument("ColumnSolver: syndrome length mismatch");
    auto packed_s = gf2::pack_vector(s);
    const std::size_t words = transform_.words_per_row();
    BitVector x(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (gf2::packed_dot(transform_.row_words(pivot_rows_[i]), packed_s.data(), words))
            x.support.push_back(i);
    for (std::size_t r = basis_.size(); r < m_; ++r)
        if (gf2::packed_dot(transform_.row_words(r), packed_s.data(), words))
            return std::nullopt;  // s outside the span of the basis columns
    return x;
}

std::optional<BitVector> solve_on_columns(const BitMatrix& A,
                                          const std::vector<std::size_t>& basis,
                                          const BitVector& s) {
    return ColumnSolver(A, basis).solve(s);
}

}  // namespace qldpc
