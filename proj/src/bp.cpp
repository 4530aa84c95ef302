#include "qldpc/bp.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qldpc {

BpDecoder::BpDecoder(const BitMatrix& H)
    : rows_(H.rows()), cols_(H.cols()), row_edges_(H.rows()), col_edges_(H.cols()) {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto c : H.row(r)) {
            row_edges_[r].push_back(edges_.size());
            col_edges_[c].push_back(edges_.size());
            edges_.push_back({r, c});
        }
    }
    msg_check_to_data_.resize(edges_.size());
    msg_data_to_check_.resize(edges_.size());
    soft_.resize(cols_);
    hard_.resize(cols_);
}

BpResult BpDecoder::decode(const BitVector& syndrome, const BpConfig& config) {
    if (syndrome.len != rows_) throw std::invalid_argument("BpDecoder: syndrome length mismatch");
    if (!(config.error_rate > 0.0 && config.error_rate <= 0.5))
        throw std::invalid_argument("BpDecoder: error_rate must be in (0, 0.5]");

    const double channel_llr = std::log((1.0 - config.error_rate) / config.error_rate);
    const std::size_t max_iter = config.max_iterations == 0 ? cols_ : config.max_iterations;
    const auto syndrome_bits = syndrome.to_bools();

    for (auto& m : msg_data_to_check_) m = channel_llr;

    BpResult result;
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        const double alpha =
            config.scaling == BpScaling::iteration_scaled ? 1.0 - std::exp2(-static_cast<double>(iter)) : 1.0;

        // Check to data: exclusion min and sign product via two smallest magnitudes.
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& eids = row_edges_[r];
            double min1 = HUGE_VAL, min2 = HUGE_VAL;
            std::size_t min1_eid = SIZE_MAX;
            int sign_product = syndrome_bits[r] ? -1 : 1;
            for (auto eid : eids) {
                const double m = msg_data_to_check_[eid];
                if (m < 0.0) sign_product = -sign_product;
                const double mag = std::fabs(m);
                if (mag < min1) {
                    min2 = min1;
                    min1 = mag;
                    min1_eid = eid;
                } else if (mag < min2) {
                    min2 = mag;
                }
            }
            for (auto eid : eids) {
                const double m = msg_data_to_check_[eid];
                const int own_sign = m < 0.0 ? -1 : 1;
                double other_min = eid == min1_eid ? min2 : min1;
                // Degree-1 check: no other neighbor, fall back to the only magnitude.
                if (other_min == HUGE_VAL) other_min = min1;
                msg_check_to_data_[eid] = alpha * sign_product * own_sign * other_min;
            }
        }

        // Data to check, soft decisions and hard decisions in one pass.
        for (std::size_t c = 0; c < cols_; ++c) {
            double total = channel_llr;
            for (auto eid : col_edges_[c]) total += msg_check_to_data_[eid];
            soft_[c] = total;
            hard_[c] = total < 0.0 ? 1 : 0;  // tie at zero decides 0
            for (auto eid : col_edges_[c]) msg_data_to_check_[eid] = total - msg_check_to_data_[eid];
        }

        bool satisfied = true;
        for (std::size_t r = 0; r < rows_ && satisfied; ++r) {
            unsigned parity = 0;
            for (auto eid : row_edges_[r]) parity ^= hard_[edges_[eid].col];
            if ((parity != 0) != syndrome_bits[r]) satisfied = false;
        }

        if (satisfied) {
            result.converged = true;
            result.iterations_used = iter;
            break;
        }
        result.iterations_used = iter;
    }

    std::vector<bool> hard_bits(cols_);
    for (std::size_t c = 0; c < cols_; ++c) hard_bits[c] = hard_[c] != 0;
    result.hard_decision = BitVector::from_bools(hard_bits);
    result.soft_decisions = soft_;
    return result;
}

std::vector<double> brute_force_marginals(const BitMatrix& H, const BitVector& s, double p) {
    const std::size_t n = H.cols();
    const std::size_t m = H.rows();
    if (H.rows() != s.len) throw std::invalid_argument("brute_force_marginals: syndrome mismatch");
    if (n > 20 || m > 64) throw std::invalid_argument("brute_force_marginals: block too large");
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("brute_force_marginals: bad p");

    // Column syndromes packed into a word; gray-code walk over all errors.
    std::vector<std::uint64_t> col_syndrome(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (auto r : H.col(c)) col_syndrome[c] |= std::uint64_t{1} << r;
    std::uint64_t target = 0;
    for (auto r : s.support) target |= std::uint64_t{1} << r;

    std::vector<double> weight_prob(n + 1);
    for (std::size_t w = 0; w <= n; ++w)
        weight_prob[w] = std::pow(p, static_cast<double>(w)) *
                         std::pow(1.0 - p, static_cast<double>(n - w));

    std::vector<double> numer(n, 0.0);
    double denom = 0.0;
    std::uint64_t error = 0, synd = 0;
    auto account = [&]() {
        if (synd != target) return;
        const double prob = weight_prob[static_cast<std::size_t>(std::popcount(error))];
        denom += prob;
        std::uint64_t bits = error;
        while (bits) {
            numer[std::countr_zero(bits)] += prob;
            bits &= bits - 1;
        }
    };
    account();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const unsigned flip = std::countr_zero(idx);
        error ^= std::uint64_t{1} << flip;
        synd ^= col_syndrome[flip];
        account();
    }
    if (denom == 0.0) throw std::runtime_error("brute_force_marginals: no error satisfies s");

    std::vector<double> marginals(n);
    for (std::size_t c = 0; c < n; ++c) marginals[c] = numer[c] / denom;
    return marginals;
}

}  // namespace qldpc
