#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qldpc/gf2.hpp"

namespace qldpc {

/// Code distance: an exact value, infinite (no codewords), or not yet known
/// (e.g. a brute-force search that ran past its cap).
class CodeDistance {
public:
    static CodeDistance known(std::size_t d) { return CodeDistance(Kind::Known, d); }
    static CodeDistance infinite() { return CodeDistance(Kind::Infinite, 0); }
    static CodeDistance unknown() { return CodeDistance(Kind::Unknown, 0); }

    bool is_known() const { return kind_ == Kind::Known; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }
    std::size_t value() const {
        if (!is_known()) throw std::logic_error("CodeDistance: value of non-finite distance");
        return value_;
    }

    friend bool operator==(const CodeDistance&, const CodeDistance&) = default;

private:
    enum class Kind { Known, Infinite, Unknown };
    CodeDistance(Kind k, std::size_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::size_t value_;
};

/// Classical binary linear code given by its parity check matrix.
struct ClassicalCode {
    BitMatrix H;
    std::size_t n = 0;  // block length (columns)
    std::size_t m = 0;  // check count (rows)
    std::size_t k = 0;  // n - rank(H)
    CodeDistance d = CodeDistance::unknown();

    static ClassicalCode from_matrix(BitMatrix H, CodeDistance d = CodeDistance::unknown());

    double rate() const { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); }
};

/// Parameters of an edge-augmentation step, including the ingredients of the
/// distance lower bound d' >= (1 + g*mu) * d.
struct AugmentationSpec {
    std::size_t g = 0;           // chain-segment length per edge
    std::size_t edge_count = 0;  // nnz of the parent check matrix
    std::size_t mu = 0;          // minimum data-node degree of the parent

    static AugmentationSpec for_parent(const ClassicalCode& parent, std::size_t g);
    std::size_t distance_lower_bound(std::size_t parent_distance) const {
        return (1 + g * mu) * parent_distance;
    }
};

/// [n,1,n] repetition code; open variant has n-1 checks, closed (ring) n.
ClassicalCode repetition_code(std::size_t n, bool closed);

/// g x g chain-segment adjacency: identity plus a 1 right of each of the
/// first g-1 diagonal entries.
BitMatrix chain_segment_matrix(std::size_t g);

/// Replace every factor-graph edge of the parent with a welded length-g
/// chain segment. Dimensions grow to (m + g*nnz) x (n + g*nnz); k is preserved.
ClassicalCode augment_edges(const ClassicalCode& parent, std::size_t g);

struct MackayNealOptions {
    std::size_t column_retries = 200;
    std::size_t matrix_restarts = 200;
    bool require_full_rank = false;
};

/// Random (l,q)-regular LDPC matrix with girth >= 6, seed-deterministic.
/// Throws std::runtime_error (with retry counts) if construction fails.
ClassicalCode mackay_neal_ldpc(std::size_t n, std::size_t col_weight, std::size_t row_weight,
                               std::uint64_t seed, const MackayNealOptions& opts = {});

/// Exact minimum distance by enumerating all nonzero kernel combinations.
/// Returns unknown() when the minimum exceeds cap, infinite() when k = 0.
/// Throws std::runtime_error when the kernel dimension exceeds the budget.
CodeDistance min_distance_bruteforce(const ClassicalCode& code, std::size_t cap = SIZE_MAX,
                                     std::size_t kernel_dim_budget = 24);

/// Code of the transposed check matrix; d reported infinite when k^T = 0.
ClassicalCode transpose_code(const ClassicalCode& code);

}  // namespace qldpc
