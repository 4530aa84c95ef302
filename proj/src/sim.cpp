#include "qldpc/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qldpc {

std::string decoder_kind_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::bp: return "bp";
        case DecoderKind::bp_osd0: return "bp-osd0";
        case DecoderKind::bp_osd_cs: return "bp-osd-cs";
        case DecoderKind::bp_osd_e: return "bp-osd-e";
    }
    return "?";
}

std::optional<DecoderKind> parse_decoder_kind(const std::string& name) {
    if (name == "bp") return DecoderKind::bp;
    if (name == "bp-osd0") return DecoderKind::bp_osd0;
    if (name == "bp-osd-cs") return DecoderKind::bp_osd_cs;
    if (name == "bp-osd-e") return DecoderKind::bp_osd_e;
    return std::nullopt;
}

BpConfig DecoderConfig::bp_config(double channel_p) const {
    BpConfig cfg;
    cfg.max_iterations = max_iterations;
    cfg.scaling = scaling;
    cfg.error_rate = std::clamp(channel_p, 1e-12, 0.5);
    return cfg;
}

OsdConfig DecoderConfig::osd_config() const {
    OsdConfig cfg;
    cfg.search_depth = search_depth;
    switch (kind) {
        case DecoderKind::bp_osd0: cfg.strategy = OsdStrategy::osd0; break;
        case DecoderKind::bp_osd_e: cfg.strategy = OsdStrategy::exhaustive; break;
        default: cfg.strategy = OsdStrategy::combination_sweep; break;
    }
    return cfg;
}

BitVector sample_bsc(std::size_t n, double p, TrialRng& rng) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("sample_bsc: p must be in [0, 0.5]");
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.uniform() < p) v.support.push_back(i);
    return v;
}

TrialOutcome decode_cycle(const CssCode& code, const BitVector& error, double channel_p,
                          const DecoderConfig& config, BpDecoder& bp, const OsdDecoder& osd) {
    if (error.len != code.n_qubits) throw std::invalid_argument("decode_cycle: error length mismatch");

    TrialOutcome out;
    out.error = error;
    out.syndrome = mat_vec(code.hz, error);

    auto bp_result = bp.decode(out.syndrome, config.bp_config(channel_p));
    out.converged_bp = bp_result.converged;
    if (bp_result.converged || !config.uses_osd()) {
        out.correction = std::move(bp_result.hard_decision);
        out.decode_path = DecodePath::bp_only;
    } else {
        out.correction = osd.decode(out.syndrome, bp_result.soft_decisions, config.osd_config());
        out.decode_path = DecodePath::bp_osd;
    }

    out.residual = xor_vec(error, out.correction);
    const bool syndrome_matched = mat_vec(code.hz, out.correction) == out.syndrome;
    out.logical_failure = !syndrome_matched || !mat_vec(code.lz, out.residual).is_zero();
    return out;
}

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 95%
    const double nt = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = phat + z2 / (2.0 * nt);
    const double margin = z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt));
    double low = failures == 0 ? 0.0 : std::max(0.0, (center - margin) / denom);
    double high = failures == trials ? 1.0 : std::min(1.0, (center + margin) / denom);
    return {low, high};
}

RunStats run_monte_carlo(const CssCode& code, double p, std::size_t trials,
                         std::uint64_t master_seed, const DecoderConfig& config,
                         std::size_t workers) {
    if (trials < 1) throw std::invalid_argument("run_monte_carlo: trials must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    auto run_range = [&](std::size_t begin, std::size_t end) -> std::size_t {
        BpDecoder bp(code.hz);
        OsdDecoder osd(code.hz);
        std::size_t failures = 0;
        for (std::size_t trial = begin; trial < end; ++trial) {
            TrialRng rng(master_seed, trial);
            const auto error = sample_bsc(code.n_qubits, p, rng);
            if (decode_cycle(code, error, p, config, bp, osd).logical_failure) ++failures;
        }
        return failures;
    };

    std::size_t failures = 0;
    if (workers <= 1) {
        failures = run_range(0, trials);
    } else {
        const std::size_t nw = std::min(workers, trials);
        std::vector<std::size_t> partial(nw, 0);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < nw; ++w) {
            const std::size_t begin = trials * w / nw;
            const std::size_t end = trials * (w + 1) / nw;
            pool.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
        }
        for (auto& t : pool) t.join();
        for (auto f : partial) failures += f;  // order-independent merge
    }

    RunStats stats;
    stats.trials = trials;
    stats.failures = failures;
    stats.logical_error_rate = static_cast<double>(failures) / static_cast<double>(trials);
    std::tie(stats.ci_low, stats.ci_high) = wilson_interval(failures, trials);
    stats.seed = master_seed;
    stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

namespace {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    TrialRng rng(master, (a << 32) ^ b);
    return rng.next();
}

}  // namespace

ThresholdEstimate estimate_threshold(const std::vector<Curve>& curves) {
    ThresholdEstimate est;
    std::vector<const Curve*> sorted;
    for (const auto& c : curves) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Curve* a, const Curve* b) { return a->d < b->d; });

    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const Curve& lo = *sorted[i];
        const Curve& hi = *sorted[i + 1];
        if (lo.d == hi.d) continue;  // degenerate pair, no ordering information
        // log p_L difference on the shared grid; crossing via linear interpolation.
        std::vector<std::pair<double, double>> diff;
        for (const auto& pt : lo.points) {
            if (!pt.usable || pt.stats.failures == 0) continue;
            for (const auto& qt : hi.points) {
                if (!qt.usable || qt.stats.failures == 0) continue;
                if (qt.p == pt.p) {
                    diff.emplace_back(pt.p, std::log(pt.stats.logical_error_rate) -
                                                std::log(qt.stats.logical_error_rate));
                    break;
                }
            }
        }
        std::sort(diff.begin(), diff.end());
        for (std::size_t j = 0; j + 1 < diff.size(); ++j) {
            const auto [pa, fa] = diff[j];
            const auto [pb, fb] = diff[j + 1];
            if (fa * fb < 0.0) {
                est.crossings.push_back(pa + (pb - pa) * fa / (fa - fb));
                break;
            }
        }
    }

    if (!est.crossings.empty()) {
        est.has_crossing = true;
        est.low = *std::min_element(est.crossings.begin(), est.crossings.end());
        est.high = *std::max_element(est.crossings.begin(), est.crossings.end());
    }
    return est;
}

SweepResult sweep_and_estimate_threshold(const std::vector<SweepInput>& codes,
                                         const std::vector<double>& p_grid,
                                         std::size_t trials_per_point, std::uint64_t master_seed,
                                         const DecoderConfig& config, std::size_t workers) {
    SweepResult result;
    for (std::size_t ci = 0; ci < codes.size(); ++ci) {
        const auto& input = codes[ci];
        Curve curve;
        curve.code_id = input.code_id;
        curve.n = input.code->n_qubits;
        curve.k = input.code->k_qubits;
        curve.d = input.distance;
        for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
            CurvePoint pt;
            pt.p = p_grid[pi];
            pt.stats = run_monte_carlo(*input.code, pt.p, trials_per_point,
                                       derive_seed(master_seed, ci, pi), config, workers);
            pt.usable = pt.stats.failures > 0;
            curve.points.push_back(std::move(pt));
        }
        result.curves.push_back(std::move(curve));
    }
    result.threshold = estimate_threshold(result.curves);
    return result;
}

}  // namespace qldpc
