#pragma once

#include <optional>
#include <string>

#include "qldpc/bp.hpp"
#include "qldpc/css.hpp"
#include "qldpc/osd.hpp"
#include "qldpc/rng.hpp"

namespace qldpc {

enum class DecoderKind { bp, bp_osd0, bp_osd_cs, bp_osd_e };

std::string decoder_kind_name(DecoderKind kind);
std::optional<DecoderKind> parse_decoder_kind(const std::string& name);

struct DecoderConfig {
    DecoderKind kind = DecoderKind::bp_osd_cs;
    std::size_t search_depth = 60;   // lambda
    std::size_t max_iterations = 0;  // 0 => block length
    BpScaling scaling = BpScaling::iteration_scaled;

    BpConfig bp_config(double channel_p) const;
    OsdConfig osd_config() const;
    bool uses_osd() const { return kind != DecoderKind::bp; }
};

struct ChannelModel {
    double p = 0.0;  // binary symmetric channel, 0 <= p <= 0.5
};

/// One bit flipped independently with probability p; deterministic per stream.
BitVector sample_bsc(std::size_t n, double p, TrialRng& rng);

enum class DecodePath { bp_only, bp_osd };

struct TrialOutcome {
    BitVector error;
    BitVector syndrome;
    BitVector correction;
    BitVector residual;
    bool converged_bp = false;
    bool logical_failure = false;
    DecodePath decode_path = DecodePath::bp_only;
};

/// One full decode cycle: syndrome, BP, OSD fallback on non-convergence,
/// residual and logical-failure check against L_Z.
TrialOutcome decode_cycle(const CssCode& code, const BitVector& error, double channel_p,
                          const DecoderConfig& config, BpDecoder& bp, const OsdDecoder& osd);

struct RunStats {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double logical_error_rate = 0.0;
    double ci_low = 0.0;   // 95% Wilson score interval
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
};

/// Wilson 95% score interval for failures/trials.
std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials);

/// Monte Carlo estimate of the logical error rate at physical rate p.
/// Bit-identical for identical (code, config, seed, trials) at any worker count.
RunStats run_monte_carlo(const CssCode& code, double p, std::size_t trials,
                         std::uint64_t master_seed, const DecoderConfig& config,
                         std::size_t workers = 1);

struct CurvePoint {
    double p = 0.0;
    RunStats stats;
    bool usable = true;  // false when zero failures: excluded from interpolation
};

struct Curve {
    std::string code_id;
    std::size_t n = 0, k = 0, d = 0;
    std::vector<CurvePoint> points;
};

struct ThresholdEstimate {
    bool has_crossing = false;
    double low = 0.0;
    double high = 0.0;
    std::vector<double> crossings;  // one per adjacent-distance pair that crosses
};

struct SweepInput {
    const CssCode* code = nullptr;
    std::string code_id;
    std::size_t distance = 0;
};

struct SweepResult {
    std::vector<Curve> curves;
    ThresholdEstimate threshold;
};

/// p_L(p) curve per code plus the threshold interval from log-linear
/// interpolation of adjacent-distance curve crossings.
SweepResult sweep_and_estimate_threshold(const std::vector<SweepInput>& codes,
                                         const std::vector<double>& p_grid,
                                         std::size_t trials_per_point, std::uint64_t master_seed,
                                         const DecoderConfig& config, std::size_t workers = 1);

/// Threshold estimation alone, for precomputed curves.
ThresholdEstimate estimate_threshold(const std::vector<Curve>& curves);

}  // namespace qldpc
