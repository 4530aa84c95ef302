#pragma once

#include "qldpc/gf2.hpp"

namespace qldpc {

enum class BpScaling { iteration_scaled, none };

struct BpConfig {
    std::size_t max_iterations = 0;  // 0 means block length
    BpScaling scaling = BpScaling::iteration_scaled;
    double error_rate = 0.0;  // channel prior p, in (0, 0.5]
};

struct BpResult {
    bool converged = false;
    BitVector hard_decision;
    std::vector<double> soft_decisions;  // LLRs; positive favors bit 0
    std::size_t iterations_used = 0;
};

/// Syndrome-based min-sum belief propagation with optional iteration-dependent
/// message scaling (alpha = 1 - 2^-iter) on a flooding schedule.
///
/// Holds private message buffers: one instance per concurrent caller.
class BpDecoder {
public:
    explicit BpDecoder(const BitMatrix& H);

    BpResult decode(const BitVector& syndrome, const BpConfig& config);

    std::size_t block_length() const { return cols_; }

private:
    struct Edge {
        std::size_t row, col;
    };

    std::size_t rows_, cols_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> row_edges_;  // edge ids per check
    std::vector<std::vector<std::size_t>> col_edges_;  // edge ids per data bit
    std::vector<double> msg_check_to_data_;
    std::vector<double> msg_data_to_check_;
    std::vector<double> soft_;
    std::vector<std::uint8_t> hard_;
};

/// Exact conditional marginals P(e_i = 1 | s) under iid BSC(p), by summing
/// over all 2^n error patterns. Oracle for small blocks (n <= 20, m <= 64).
std::vector<double> brute_force_marginals(const BitMatrix& H, const BitVector& s, double p);

}  // namespace qldpc
