#include <doctest.h>

#include <random>
#include <set>

#include "qldpc/css.hpp"
#include "qldpc/gf2_solve.hpp"

using namespace qldpc;

namespace {

ClassicalCode random_parent(std::size_t n, std::mt19937_64& rng) {
    std::size_t m = 2 + rng() % n;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t deg = 1 + rng() % 3;
        for (std::size_t t = 0; t < deg; ++t) seen.insert({rng() % m, c});
    }
    std::vector<std::pair<std::size_t, std::size_t>> entries(seen.begin(), seen.end());
    return ClassicalCode::from_matrix(BitMatrix::from_entries(m, n, std::move(entries)));
}

bool commutes(const BitMatrix& hx, const BitMatrix& hz) {
    for (std::size_t r = 0; r < hz.rows(); ++r)
        if (!mat_vec(hx, hz.row_vector(r)).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("hgp of open repetition-3 is the [[13,1,3]] surface code") {
    auto code = hgp_symmetric(repetition_code(3, false));
    CHECK(code.n_qubits == 13);
    CHECK(code.k_qubits == 1);
    CHECK(code.lx.rows() == 1);
    CHECK(code.lz.rows() == 1);
    CHECK(quantum_distance_bruteforce(code) == CodeDistance::known(3));
}

TEST_CASE("hgp of ring-3 is the [[18,2,3]] toric code") {
    auto code = hgp_symmetric(repetition_code(3, true));
    CHECK(code.n_qubits == 18);
    CHECK(code.k_qubits == 2);
    CHECK(quantum_distance_bruteforce(code) == CodeDistance::known(3));
    auto params = css_params(code);
    CHECK(params.mean_check_weight == doctest::Approx(4.0));
}

TEST_CASE("hgp of the (111;111) parent is [[13,5,2]]") {
    auto parent = ClassicalCode::from_matrix(BitMatrix::from_dense({{1, 1, 1}, {1, 1, 1}}));
    auto code = hgp_symmetric(parent);
    CHECK(code.n_qubits == 13);
    CHECK(code.k_qubits == 5);
    CHECK(quantum_distance_bruteforce(code) == CodeDistance::known(2));
}

TEST_CASE("hgp of a square full-rank parent has no logicals") {
    auto code = hgp_symmetric(ClassicalCode::from_matrix(BitMatrix::identity(3)));
    CHECK(code.k_qubits == 0);
    CHECK(code.lx.rows() == 0);
    CHECK(code.lz.rows() == 0);
}

TEST_CASE("commutativity and k formula over random parents") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 100; ++trial) {
        auto parent = random_parent(3 + rng() % 10, rng);  // n <= 12
        auto code = hgp_symmetric(parent);
        CHECK(commutes(code.hx, code.hz));
        std::size_t kt = parent.m - rank(parent.H);
        CHECK(code.k_qubits == parent.k * parent.k + kt * kt);
        CHECK(code.n_qubits == parent.n * parent.n + parent.m * parent.m);
        CHECK(code.n_qubits - rank(code.hx) - rank(code.hz) == code.k_qubits);
    }
}

TEST_CASE("logical operator bases") {
    auto code = hgp_symmetric(repetition_code(3, true));
    // Rows of L_Z lie in kernel(H_X) but outside rowspace(H_Z); pairing is
    // the identity after normalization.
    for (std::size_t r = 0; r < code.lz.rows(); ++r) {
        auto v = code.lz.row_vector(r);
        CHECK(mat_vec(code.hx, v).is_zero());
        CHECK_FALSE(in_row_space(code.hz, v));
    }
    for (std::size_t r = 0; r < code.lx.rows(); ++r) {
        auto v = code.lx.row_vector(r);
        CHECK(mat_vec(code.hz, v).is_zero());
        CHECK_FALSE(in_row_space(code.hx, v));
    }
    for (std::size_t i = 0; i < code.lz.rows(); ++i)
        for (std::size_t j = 0; j < code.lx.rows(); ++j) {
            bool dot = mat_vec(code.lx, code.lz.row_vector(i)).get(j);
            CHECK(dot == (i == j));
        }
}

TEST_CASE("logical pairing holds on random parents") {
    std::mt19937_64 rng(223);
    for (int trial = 0; trial < 20; ++trial) {
        auto code = hgp_symmetric(random_parent(3 + rng() % 6, rng));
        for (std::size_t i = 0; i < code.k_qubits; ++i)
            for (std::size_t j = 0; j < code.k_qubits; ++j)
                CHECK(mat_vec(code.lx, code.lz.row_vector(i)).get(j) == (i == j));
    }
}

TEST_CASE("from_checks rejects non-commuting inputs") {
    CHECK_THROWS_AS(
        CssCode::from_checks(BitMatrix::from_dense({{1, 0}}), BitMatrix::from_dense({{1, 0}})),
        std::invalid_argument);
}

TEST_CASE("css_params cross-checks against the parent") {
    MackayNealOptions opts;
    opts.require_full_rank = true;
    auto parent = mackay_neal_ldpc(16, 3, 4, 3, opts);
    auto code = hgp_symmetric(parent);
    parent.d = CodeDistance::known(6);  // declared family distance
    auto params = css_params(code, parent);
    CHECK(params.n == 400);
    CHECK(params.k == 16);
    CHECK(params.d == CodeDistance::known(6));
    CHECK(params.rate == doctest::Approx(0.04));
    CHECK(params.mean_check_weight == doctest::Approx(7.0));
    CHECK(params.max_col_weight <= 8);  // max(2l, 2q)
    CHECK(params.max_row_weight <= 7);  // l + q
}

TEST_CASE("sparsity inheritance on random LDPC parents") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto parent = mackay_neal_ldpc(16, 3, 4, seed);
        auto code = hgp_symmetric(parent);
        CHECK(code.hx.max_row_weight() <= 7);
        CHECK(code.hz.max_row_weight() <= 7);
        CHECK(code.hx.max_col_weight() <= 8);
        CHECK(code.hz.max_col_weight() <= 8);
    }
}
