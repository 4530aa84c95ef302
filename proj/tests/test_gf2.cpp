#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qldpc/gf2.hpp"
#include "qldpc/gf2_solve.hpp"

using namespace qldpc;

namespace {

BitMatrix ring3() { return BitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); }

BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng)) entries.emplace_back(r, c);
    return BitMatrix::from_entries(rows, cols, std::move(entries));
}

}  // namespace

TEST_CASE("mat_vec basics") {
    auto A = BitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    CHECK(mat_vec(A, BitVector(3, {0})) == BitVector(2, {0}));
    CHECK(mat_vec(ring3(), BitVector(3, {1})) == BitVector(3, {0, 1}));

    auto id = BitMatrix::identity(7);
    BitVector v(7, {1, 3, 6});
    CHECK(mat_vec(id, v) == v);

    CHECK_THROWS_AS(mat_vec(A, BitVector(4)), std::invalid_argument);
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::from_dense({{1, 1, 1}, {1, 1, 1}})) == 1);
    CHECK(rank(ring3()) == 2);
    CHECK(rank(BitMatrix::zero(4, 5)) == 0);
    CHECK(rank(BitMatrix::identity(9)) == 9);
}

TEST_CASE("rank equals transpose rank on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(1 + rng() % 50, 1 + rng() % 50, 0.2, rng);
        CHECK(rank(A) == rank(A.transpose()));
    }
}

TEST_CASE("kron") {
    auto row = BitMatrix::from_dense({{1, 1}});
    CHECK(kron(BitMatrix::identity(2), row) ==
          BitMatrix::from_dense({{1, 1, 0, 0}, {0, 0, 1, 1}}));

    auto H = BitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    auto K = kron(H, BitMatrix::identity(3));
    CHECK(K.rows() == 6);
    CHECK(K.cols() == 9);

    std::mt19937_64 rng(5);
    auto A = random_matrix(4, 5, 0.4, rng);
    auto B = random_matrix(3, 6, 0.3, rng);
    CHECK(kron(A, B).nnz() == A.nnz() * B.nnz());
}

TEST_CASE("pivot_columns") {
    auto A = BitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    std::vector<std::size_t> natural = {0, 1, 2};
    CHECK(pivot_columns(A, natural) == std::vector<std::size_t>{0, 1});
    std::vector<std::size_t> reversed = {2, 1, 0};
    CHECK(pivot_columns(A, reversed) == std::vector<std::size_t>{2, 1});

    auto ones = BitMatrix::from_dense({{1, 1, 1}, {1, 1, 1}});
    CHECK(pivot_columns(ones, natural).size() == 1);
    CHECK(pivot_columns(ones, reversed) == std::vector<std::size_t>{2});
}

TEST_CASE("pivot_columns length is rank for any order") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(3 + rng() % 10, 3 + rng() % 10, 0.3, rng);
        std::vector<std::size_t> order(A.cols());
        std::iota(order.begin(), order.end(), 0u);
        std::shuffle(order.begin(), order.end(), rng);
        auto pivots = pivot_columns(A, order);
        CHECK(pivots.size() == rank(A));
        // Relative order preserved.
        std::vector<std::size_t> pos(A.cols());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        for (std::size_t i = 1; i < pivots.size(); ++i) CHECK(pos[pivots[i - 1]] < pos[pivots[i]]);
    }
}

TEST_CASE("solve_on_columns") {
    auto H = ring3();
    auto e = solve_on_columns(H, {1, 2}, BitVector(3, {0, 1}));
    REQUIRE(e.has_value());
    CHECK(*e == BitVector(2, {0}));  // error on column 1
    CHECK(mat_vec(H, BitVector(3, {1})) == BitVector(3, {0, 1}));

    CHECK(*solve_on_columns(H, {0, 1}, BitVector(3)) == BitVector(2));

    auto id = BitMatrix::identity(5);
    BitVector s(5, {0, 2, 4});
    CHECK(*solve_on_columns(id, {0, 1, 2, 3, 4}, s) == s);

    // Inconsistent system reported, not truncated.
    auto A = BitMatrix::from_dense({{1, 0}, {1, 0}});
    CHECK_FALSE(solve_on_columns(A, {0}, BitVector(2, {0})).has_value());

    CHECK_THROWS_AS(ColumnSolver(BitMatrix::from_dense({{1, 1}, {1, 1}}), {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("solve then mat_vec reproduces s") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(4 + rng() % 8, 4 + rng() % 8, 0.35, rng);
        std::vector<std::size_t> order(A.cols());
        std::iota(order.begin(), order.end(), 0u);
        auto basis = pivot_columns(A, order);
        if (basis.empty()) continue;
        // Pick s inside the span: image of a random vector.
        std::vector<bool> bits(A.cols());
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng() & 1;
        auto s = mat_vec(A, BitVector::from_bools(bits));
        auto coeffs = solve_on_columns(A, basis, s);
        REQUIRE(coeffs.has_value());
        std::vector<bool> full(A.cols(), false);
        for (auto i : coeffs->support) full[basis[i]] = true;
        CHECK(mat_vec(A, BitVector::from_bools(full)) == s);
    }
}

TEST_CASE("kernel_basis") {
    auto basis = kernel_basis(BitMatrix::from_dense({{1, 1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == BitVector(2, {0, 1}));

    auto ring = kernel_basis(ring3());
    REQUIRE(ring.size() == 1);
    CHECK(ring[0] == BitVector(3, {0, 1, 2}));

    CHECK(kernel_basis(BitMatrix::identity(6)).empty());
}

TEST_CASE("kernel vectors annihilate") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto A = random_matrix(3 + rng() % 10, 3 + rng() % 12, 0.3, rng);
        auto basis = kernel_basis(A);
        CHECK(basis.size() == A.cols() - rank(A));
        for (const auto& v : basis) CHECK(mat_vec(A, v).is_zero());
    }
}

TEST_CASE("in_row_space") {
    auto H = ring3();
    CHECK(in_row_space(H, H.row_vector(0)));
    CHECK(in_row_space(H, BitVector(3)));
    CHECK_FALSE(in_row_space(H, BitVector(3, {0, 1, 2})));
    CHECK_THROWS_AS(in_row_space(H, BitVector(5)), std::invalid_argument);
}

TEST_CASE("transpose consistency across operations") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        auto A = random_matrix(2 + rng() % 8, 2 + rng() % 8, 0.4, rng);
        auto B = random_matrix(2 + rng() % 5, 2 + rng() % 5, 0.4, rng);
        for (const auto& M : {kron(A, B), hstack(A, random_matrix(A.rows(), 3, 0.5, rng)),
                              A.transpose()}) {
            // Rebuilding by_col from by_row must give the same entry set.
            auto round_trip = M.transpose().transpose();
            CHECK(round_trip == M);
            std::size_t col_nnz = 0;
            for (std::size_t c = 0; c < M.cols(); ++c) col_nnz += M.col_weight(c);
            CHECK(col_nnz == M.nnz());
            for (const auto& [r, c] : M.entries()) {
                auto col = M.col(c);
                CHECK(std::binary_search(col.begin(), col.end(), r));
            }
        }
    }
}
