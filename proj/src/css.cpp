#include "qldpc/css.hpp"

#include <bit>

#include "qldpc/gf2_solve.hpp"

namespace qldpc {
namespace {

bool checks_commute(const BitMatrix& hx, const BitMatrix& hz) {
    if (hx.cols() != hz.cols()) return false;
    std::vector<std::vector<std::uint64_t>> hx_rows;
    hx_rows.reserve(hx.rows());
    for (std::size_t r = 0; r < hx.rows(); ++r) hx_rows.push_back(gf2::pack_vector(hx.row_vector(r)));
    const std::size_t words = hx_rows.empty() ? 0 : hx_rows[0].size();
    for (std::size_t r = 0; r < hz.rows(); ++r) {
        auto zrow = gf2::pack_vector(hz.row_vector(r));
        for (const auto& xrow : hx_rows)
            if (gf2::packed_dot(zrow.data(), xrow.data(), words)) return false;
    }
    return true;
}

/// Inverse of a small GF(2) matrix given as packed rows. Throws if singular.
gf2::PackedMatrix invert_small(const gf2::PackedMatrix& m) {
    const std::size_t k = m.rows();
    gf2::PackedMatrix aug(k, 2 * k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            if (m.get(r, c)) aug.set(r, c);
        aug.set(r, k + r);
    }
    if (gf2::rref_in_place(aug, k).size() != k)
        throw std::logic_error("logical_operators: singular pairing matrix");
    gf2::PackedMatrix inv(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            if (aug.get(r, k + c)) inv.set(r, c);
    return inv;
}

std::vector<BitVector> independent_logicals(const BitMatrix& kernel_of,
                                            const BitMatrix& modulo_rows) {
    auto span = gf2::EchelonBasis::from_rows(modulo_rows);
    std::vector<BitVector> logicals;
    for (const auto& v : kernel_basis(kernel_of))
        if (span.add(v)) logicals.push_back(v);
    return logicals;
}

BitMatrix rows_to_matrix(std::size_t cols, const std::vector<BitVector>& rows) {
    std::vector<std::vector<std::size_t>> lists;
    lists.reserve(rows.size());
    for (const auto& r : rows) lists.push_back(r.support);
    return BitMatrix::from_rows(cols, lists);
}

}  // namespace

std::pair<BitMatrix, BitMatrix> logical_operators(const BitMatrix& hx, const BitMatrix& hz) {
    if (!checks_commute(hx, hz))
        throw std::invalid_argument("logical_operators: stabilizers do not commute");
    const std::size_t n = hx.cols();

    auto lz_rows = independent_logicals(hx, hz);  // kernel(H_X) mod rowspace(H_Z)
    auto lx_rows = independent_logicals(hz, hx);
    if (lz_rows.size() != lx_rows.size())
        throw std::logic_error("logical_operators: X/Z logical counts disagree");
    const std::size_t k = lz_rows.size();

    BitMatrix lz = rows_to_matrix(n, lz_rows);
    if (k == 0) return {rows_to_matrix(n, {}), std::move(lz)};

    // Pairing matrix M = L_Z * L_X^T; renormalize L_X so the pairing is identity.
    gf2::PackedMatrix pairing(k, k);
    std::vector<std::vector<std::uint64_t>> lx_packed;
    for (const auto& r : lx_rows) lx_packed.push_back(gf2::pack_vector(r));
    const std::size_t words = lx_packed[0].size();
    for (std::size_t i = 0; i < k; ++i) {
        auto zi = gf2::pack_vector(lz_rows[i]);
        for (std::size_t j = 0; j < k; ++j)
            if (gf2::packed_dot(zi.data(), lx_packed[j].data(), words)) pairing.set(i, j);
    }
    auto inv = invert_small(pairing);  // want L_X' = (M^{-1})^T L_X

    std::vector<BitVector> lx_norm;
    lx_norm.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::uint64_t> acc(words, 0);
        for (std::size_t j = 0; j < k; ++j)
            if (inv.get(j, i))  // transpose of the inverse
                for (std::size_t w = 0; w < words; ++w) acc[w] ^= lx_packed[j][w];
        BitVector row(n);
        for (std::size_t b = 0; b < n; ++b)
            if ((acc[b / 64] >> (b % 64)) & 1u) row.support.push_back(b);
        lx_norm.push_back(std::move(row));
    }
    return {rows_to_matrix(n, lx_norm), std::move(lz)};
}

CssCode CssCode::from_checks(BitMatrix hx, BitMatrix hz) {
    if (hx.cols() != hz.cols())
        throw std::invalid_argument("CssCode: H_X and H_Z column counts differ");
    CssCode code;
    code.n_qubits = hx.cols();
    auto [lx, lz] = logical_operators(hx, hz);
    code.k_qubits = lz.rows();
    const std::size_t by_rank = code.n_qubits - rank(hx) - rank(hz);
    if (by_rank != code.k_qubits)
        throw std::logic_error("CssCode: logical count disagrees with rank formula");
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.lx = std::move(lx);
    code.lz = std::move(lz);
    return code;
}

CssCode hgp_symmetric(const ClassicalCode& parent) {
    const auto& h = parent.H;
    const auto ht = h.transpose();
    const auto id_n = BitMatrix::identity(parent.n);
    const auto id_m = BitMatrix::identity(parent.m);
    BitMatrix hx = hstack(kron(h, id_n), kron(id_m, ht));
    BitMatrix hz = hstack(kron(id_n, h), kron(ht, id_m));
    return CssCode::from_checks(std::move(hx), std::move(hz));
}

QuantumParams css_params(const CssCode& code, CodeDistance d) {
    QuantumParams p;
    p.n = code.n_qubits;
    p.k = code.k_qubits;
    p.d = d;
    p.rate = p.n == 0 ? 0.0 : static_cast<double>(p.k) / static_cast<double>(p.n);
    const std::size_t check_rows = code.hx.rows() + code.hz.rows();
    p.mean_check_weight =
        check_rows == 0 ? 0.0
                        : static_cast<double>(code.hx.nnz() + code.hz.nnz()) / static_cast<double>(check_rows);
    for (std::size_t j = 0; j < p.n; ++j)
        p.max_col_weight = std::max(p.max_col_weight, code.hx.col_weight(j) + code.hz.col_weight(j));
    p.max_row_weight = std::max(code.hx.max_row_weight(), code.hz.max_row_weight());
    return p;
}

QuantumParams css_params(const CssCode& code, const ClassicalCode& parent) {
    const auto t = transpose_code(parent);
    if (code.n_qubits != parent.n * parent.n + parent.m * parent.m)
        throw std::logic_error("css_params: qubit count disagrees with n^2 + m^2");
    if (code.k_qubits != parent.k * parent.k + t.k * t.k)
        throw std::logic_error("css_params: logical count disagrees with k^2 + (k^T)^2");

    CodeDistance d = CodeDistance::unknown();
    if (parent.d.is_known() && t.d.is_infinite()) {
        d = parent.d;
    } else if (parent.d.is_known() && t.d.is_known()) {
        d = CodeDistance::known(std::min(parent.d.value(), t.d.value()));
    } else if (parent.d.is_infinite()) {
        d = t.d;
    }
    return css_params(code, d);
}

CodeDistance quantum_distance_bruteforce(const CssCode& code, std::size_t cap,
                                         std::size_t kernel_dim_budget) {
    std::size_t best = SIZE_MAX;
    auto one_species = [&](const BitMatrix& kernel_of, const BitMatrix& stabilizers) {
        auto basis = kernel_basis(kernel_of);
        if (basis.size() > kernel_dim_budget)
            throw std::runtime_error("quantum_distance_bruteforce: kernel dimension exceeds budget");
        if (basis.empty()) return;
        auto span = gf2::EchelonBasis::from_rows(stabilizers);
        std::vector<std::vector<std::uint64_t>> packed;
        for (const auto& v : basis) packed.push_back(gf2::pack_vector(v));
        const std::size_t words = packed[0].size();
        std::vector<std::uint64_t> current(words, 0);
        const std::uint64_t total = std::uint64_t{1} << basis.size();
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            const unsigned flip = std::countr_zero(idx);
            for (std::size_t w = 0; w < words; ++w) current[w] ^= packed[flip][w];
            std::size_t weight = 0;
            for (std::size_t w = 0; w < words; ++w) weight += std::popcount(current[w]);
            if (weight >= best) continue;
            BitVector v(code.n_qubits);
            for (std::size_t b = 0; b < code.n_qubits; ++b)
                if ((current[b / 64] >> (b % 64)) & 1u) v.support.push_back(b);
            if (!span.contains(v)) best = weight;
        }
    };
    one_species(code.hx, code.hz);  // X-type logicals
    one_species(code.hz, code.hx);
    if (best == SIZE_MAX) return CodeDistance::infinite();
    if (best > cap) return CodeDistance::unknown();
    return CodeDistance::known(best);
}

}  // namespace qldpc
