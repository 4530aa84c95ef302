#pragma once

#include "qldpc/classical.hpp"
#include "qldpc/gf2.hpp"

namespace qldpc {

/// CSS stabilizer code: paired X/Z check matrices plus logical operator bases.
/// Immutable once constructed; shared read-only by simulation workers.
struct CssCode {
    BitMatrix hx;
    BitMatrix hz;
    BitMatrix lx;  // k rows, X-type logicals
    BitMatrix lz;  // k rows, Z-type logicals
    std::size_t n_qubits = 0;
    std::size_t k_qubits = 0;

    /// Builds logicals and checks all CSS invariants (commutativity, rank
    /// count, pairing). Throws std::invalid_argument when hz * hx^T != 0.
    static CssCode from_checks(BitMatrix hx, BitMatrix hz);
};

struct QuantumParams {
    std::size_t n = 0;
    std::size_t k = 0;
    CodeDistance d = CodeDistance::unknown();
    double rate = 0.0;
    double mean_check_weight = 0.0;  // average row weight over H_X and H_Z
    std::size_t max_col_weight = 0;  // per-qubit check degree across H_X + H_Z
    std::size_t max_row_weight = 0;
};

/// Symmetric hypergraph product of a classical parent code.
CssCode hgp_symmetric(const ClassicalCode& parent);

/// Logical operator bases: L_Z spans kernel(H_X) mod rowspace(H_Z) and vice
/// versa, normalized so that L_Z * L_X^T is the identity.
std::pair<BitMatrix, BitMatrix> logical_operators(const BitMatrix& hx, const BitMatrix& hz);

/// Quantum parameters of a hypergraph product code, cross-checked against the
/// parent and transpose-code parameters. Throws std::logic_error when the
/// rank-based logical count disagrees with k^2 + (k^T)^2.
QuantumParams css_params(const CssCode& code, const ClassicalCode& parent);

/// Parameters from the matrices alone (distance left as supplied).
QuantumParams css_params(const CssCode& code, CodeDistance d = CodeDistance::unknown());

/// Exact min weight over logical (non-stabilizer) kernel vectors, both
/// species; unknown() past cap. Intended for tiny codes only.
CodeDistance quantum_distance_bruteforce(const CssCode& code, std::size_t cap = SIZE_MAX,
                                         std::size_t kernel_dim_budget = 24);

}  // namespace qldpc
