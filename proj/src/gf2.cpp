#include "qldpc/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace qldpc {

BitVector::BitVector(std::size_t n, std::vector<std::size_t> ones) : len(n), support(std::move(ones)) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (!support.empty() && support.back() >= len)
        throw std::invalid_argument("BitVector: index out of range");
}

BitVector BitVector::from_bools(const std::vector<bool>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.support.push_back(i);
    return v;
}

bool BitVector::get(std::size_t i) const {
    return std::binary_search(support.begin(), support.end(), i);
}

std::vector<bool> BitVector::to_bools() const {
    std::vector<bool> bits(len, false);
    for (auto i : support) bits[i] = true;
    return bits;
}

BitVector xor_vec(const BitVector& a, const BitVector& b) {
    if (a.len != b.len) throw std::invalid_argument("xor_vec: length mismatch");
    BitVector out(a.len);
    std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                  b.support.begin(), b.support.end(),
                                  std::back_inserter(out.support));
    return out;
}

BitMatrix BitMatrix::from_entries(std::size_t rows, std::size_t cols,
                                  std::vector<std::pair<std::size_t, std::size_t>> entries) {
    BitMatrix m(rows, cols);
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    for (const auto& [r, c] : entries) {
        if (r >= rows || c >= cols) throw std::invalid_argument("BitMatrix: entry out of range");
        m.by_row_[r].push_back(c);
        m.by_col_[c].push_back(r);
    }
    m.nnz_ = entries.size();
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<std::vector<std::size_t>>& rows) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto c : rows[r]) entries.emplace_back(r, c);
    return from_entries(rows.size(), cols, std::move(entries));
}

BitMatrix BitMatrix::from_dense(const std::vector<std::vector<int>>& dense) {
    std::size_t rows = dense.size();
    std::size_t cols = rows == 0 ? 0 : dense[0].size();
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        if (dense[r].size() != cols) throw std::invalid_argument("BitMatrix: ragged dense input");
        for (std::size_t c = 0; c < cols; ++c)
            if (dense[r][c] % 2 != 0) entries.emplace_back(r, c);
    }
    return from_entries(rows, cols, std::move(entries));
}

BitMatrix BitMatrix::identity(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) entries.emplace_back(i, i);
    return from_entries(n, n, std::move(entries));
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
    const auto& r = by_row_[i];
    return std::binary_search(r.begin(), r.end(), j);
}

std::size_t BitMatrix::max_row_weight() const {
    std::size_t w = 0;
    for (const auto& r : by_row_) w = std::max(w, r.size());
    return w;
}

std::size_t BitMatrix::max_col_weight() const {
    std::size_t w = 0;
    for (const auto& c : by_col_) w = std::max(w, c.size());
    return w;
}

std::size_t BitMatrix::min_col_weight() const {
    std::size_t w = SIZE_MAX;
    for (const auto& c : by_col_) w = std::min(w, c.size());
    return cols_ == 0 ? 0 : w;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    t.by_row_ = by_col_;
    t.by_col_ = by_row_;
    t.nnz_ = nnz_;
    return t;
}

BitVector BitMatrix::row_vector(std::size_t i) const {
    BitVector v(cols_);
    v.support.assign(by_row_[i].begin(), by_row_[i].end());
    return v;
}

std::vector<std::pair<std::size_t, std::size_t>> BitMatrix::entries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(nnz_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto c : by_row_[r]) out.emplace_back(r, c);
    return out;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.by_row_ == b.by_row_;
}

BitVector mat_vec(const BitMatrix& A, const BitVector& v) {
    if (A.cols() != v.len) throw std::invalid_argument("mat_vec: dimension mismatch");
    BitVector out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto r = A.row(i);
        std::size_t overlap = 0;
        auto it = v.support.begin();
        for (auto c : r) {
            it = std::lower_bound(it, v.support.end(), c);
            if (it == v.support.end()) break;
            if (*it == c) ++overlap;
        }
        if (overlap % 2 == 1) out.support.push_back(i);
    }
    return out;
}

BitMatrix kron(const BitMatrix& A, const BitMatrix& B) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    entries.reserve(A.nnz() * B.nnz());
    for (std::size_t ar = 0; ar < A.rows(); ++ar)
        for (auto ac : A.row(ar))
            for (std::size_t br = 0; br < B.rows(); ++br)
                for (auto bc : B.row(br))
                    entries.emplace_back(ar * B.rows() + br, ac * B.cols() + bc);
    return BitMatrix::from_entries(A.rows() * B.rows(), A.cols() * B.cols(), std::move(entries));
}

BitMatrix hstack(const BitMatrix& A, const BitMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("hstack: row count mismatch");
    std::vector<std::pair<std::size_t, std::size_t>> entries = A.entries();
    for (const auto& [r, c] : B.entries()) entries.emplace_back(r, c + A.cols());
    return BitMatrix::from_entries(A.rows(), A.cols() + B.cols(), std::move(entries));
}

BitMatrix vstack(const BitMatrix& A, const BitMatrix& B) {
    if (A.cols() != B.cols()) throw std::invalid_argument("vstack: column count mismatch");
    std::vector<std::pair<std::size_t, std::size_t>> entries = A.entries();
    for (const auto& [r, c] : B.entries()) entries.emplace_back(r + A.rows(), c);
    return BitMatrix::from_entries(A.rows() + B.rows(), A.cols(), std::move(entries));
}

namespace gf2 {

PackedMatrix PackedMatrix::from_sparse(const BitMatrix& m) {
    PackedMatrix p(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto c : m.row(r)) p.set(r, c);
    return p;
}

PackedMatrix PackedMatrix::from_sparse_permuted(const BitMatrix& m,
                                                std::span<const std::size_t> column_order) {
    PackedMatrix p(m.rows(), column_order.size());
    std::vector<std::size_t> where(m.cols(), SIZE_MAX);
    for (std::size_t pos = 0; pos < column_order.size(); ++pos) where[column_order[pos]] = pos;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto c : m.row(r))
            if (where[c] != SIZE_MAX) p.set(r, where[c]);
    return p;
}

void PackedMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    auto* s = row_words(src);
    auto* d = row_words(dst);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void PackedMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto* ra = row_words(a);
    auto* rb = row_words(b);
    for (std::size_t w = 0; w < words_; ++w) std::swap(ra[w], rb[w]);
}

}  // namespace gf2
}  // namespace qldpc
