#include <doctest.h>

#include <cmath>

#include "qldpc/classical.hpp"
#include "qldpc/families.hpp"
#include "qldpc/sim.hpp"

using namespace qldpc;

namespace {

const CssCode& toric3() {
    static CssCode code = hgp_symmetric(repetition_code(3, true));
    return code;
}

DecoderConfig config_for(DecoderKind kind, std::size_t lambda = 60) {
    DecoderConfig c;
    c.kind = kind;
    c.search_depth = lambda;
    return c;
}

}  // namespace

TEST_CASE("decoder kind names round-trip") {
    for (auto kind : {DecoderKind::bp, DecoderKind::bp_osd0, DecoderKind::bp_osd_cs,
                      DecoderKind::bp_osd_e}) {
        auto parsed = parse_decoder_kind(decoder_kind_name(kind));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == kind);
    }
    CHECK_FALSE(parse_decoder_kind("mwpm").has_value());
}

TEST_CASE("sample_bsc") {
    TrialRng rng(1, 0);
    CHECK(sample_bsc(100, 0.0, rng).is_zero());

    TrialRng a(99, 7), b(99, 7);
    CHECK(sample_bsc(500, 0.2, a) == sample_bsc(500, 0.2, b));

    TrialRng big(5, 0);
    auto v = sample_bsc(10000, 0.5, big);
    CHECK(v.weight() > 4850);
    CHECK(v.weight() < 5150);

    TrialRng r(1, 1);
    CHECK_THROWS_AS(sample_bsc(10, 0.6, r), std::invalid_argument);
}

TEST_CASE("decode_cycle trivial cases") {
    const auto& code = toric3();
    BpDecoder bp(code.hz);
    OsdDecoder osd(code.hz);
    auto cfg = config_for(DecoderKind::bp_osd_cs);

    auto clean = decode_cycle(code, BitVector(code.n_qubits), 0.05, cfg, bp, osd);
    CHECK(clean.converged_bp);
    CHECK_FALSE(clean.logical_failure);
    CHECK(clean.correction.is_zero());
    CHECK(clean.decode_path == DecodePath::bp_only);

    // A stabilizer (row of H_X) has zero syndrome and no logical effect.
    auto stab = decode_cycle(code, code.hx.row_vector(0), 0.05, cfg, bp, osd);
    CHECK(stab.syndrome.is_zero());
    CHECK(stab.residual == code.hx.row_vector(0));
    CHECK_FALSE(stab.logical_failure);

    // A logical operator is invisible to the checks but flips the logical state.
    auto logical = decode_cycle(code, code.lx.row_vector(0), 0.05, cfg, bp, osd);
    CHECK(logical.syndrome.is_zero());
    CHECK(logical.correction.is_zero());
    CHECK(logical.logical_failure);
}

TEST_CASE("decode_cycle invariants on random errors") {
    const auto& code = toric3();
    BpDecoder bp(code.hz);
    OsdDecoder osd(code.hz);
    auto cfg = config_for(DecoderKind::bp_osd_cs);
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        TrialRng rng(77, trial);
        auto error = sample_bsc(code.n_qubits, 0.08, rng);
        auto out = decode_cycle(code, error, 0.08, cfg, bp, osd);
        CHECK(out.syndrome == mat_vec(code.hz, error));
        CHECK(out.residual == xor_vec(error, out.correction));
        CHECK(mat_vec(code.hz, out.correction) == out.syndrome);
        if (!out.logical_failure) CHECK(mat_vec(code.lz, out.residual).is_zero());
    }
}

TEST_CASE("wilson_interval") {
    auto [lo, hi] = wilson_interval(0, 100);
    CHECK(lo == 0.0);
    CHECK(hi > 0.0);
    CHECK(hi < 0.05);

    auto [lo2, hi2] = wilson_interval(50, 100);
    CHECK(lo2 > 0.39);
    CHECK(hi2 < 0.61);
    CHECK(lo2 <= 0.5);
    CHECK(hi2 >= 0.5);

    auto [lo3, hi3] = wilson_interval(100, 100);
    CHECK(lo3 > 0.95);
    CHECK(hi3 == 1.0);
}

TEST_CASE("run_monte_carlo basic contracts") {
    const auto& code = toric3();
    auto cfg = config_for(DecoderKind::bp_osd_cs);

    auto clean = run_monte_carlo(code, 0.0, 200, 1, cfg);
    CHECK(clean.failures == 0);

    auto stats = run_monte_carlo(code, 0.10, 2000, 9, cfg);
    CHECK(stats.failures > 0);
    CHECK(stats.failures < stats.trials);
    CHECK(stats.ci_low <= stats.logical_error_rate);
    CHECK(stats.ci_high >= stats.logical_error_rate);
}

TEST_CASE("run_monte_carlo is worker-count independent") {
    const auto& code = toric3();
    auto cfg = config_for(DecoderKind::bp_osd_cs);
    auto one = run_monte_carlo(code, 0.08, 1500, 31415, cfg, 1);
    auto eight = run_monte_carlo(code, 0.08, 1500, 31415, cfg, 8);
    CHECK(one.failures == eight.failures);
    CHECK(one.logical_error_rate == eight.logical_error_rate);

    auto repeat = run_monte_carlo(code, 0.08, 1500, 31415, cfg, 3);
    CHECK(repeat.failures == one.failures);
}

TEST_CASE("estimate_threshold finds a synthetic crossing") {
    // Hand-built curves: the d=3 curve starts above and ends below the d=5
    // curve, crossing between p = 0.09 and p = 0.11.
    auto point = [](double p, std::size_t failures) {
        CurvePoint pt;
        pt.p = p;
        pt.stats.trials = 10000;
        pt.stats.failures = failures;
        pt.stats.logical_error_rate = failures / 10000.0;
        pt.usable = failures > 0;
        return pt;
    };
    Curve low;
    low.d = 3;
    low.points = {point(0.07, 200), point(0.09, 400), point(0.11, 800), point(0.13, 1600)};
    Curve high;
    high.d = 5;
    high.points = {point(0.07, 50), point(0.09, 300), point(0.11, 1200), point(0.13, 3000)};

    auto est = estimate_threshold({low, high});
    REQUIRE(est.has_crossing);
    CHECK(est.low > 0.09);
    CHECK(est.high < 0.11);

    // Identical curves: degenerate, no crossing reported.
    Curve twin = low;
    CHECK_FALSE(estimate_threshold({low, twin}).has_crossing);

    // Zero-failure points are excluded, not interpolated through.
    Curve sparse = high;
    sparse.points[0] = point(0.07, 0);
    auto est2 = estimate_threshold({low, sparse});
    CHECK(est2.has_crossing);
}

TEST_CASE("x-only decoding is structurally sufficient for symmetric products") {
    // Swapping the two qubit blocks of H_X yields exactly H_Z of the product
    // built from the transposed parent, so the Z-species decoding problem is
    // the X-species problem of an equivalent code: one species suffices.
    auto parent = repetition_code(3, true);
    auto code = hgp_symmetric(parent);
    auto mirror = hgp_symmetric(transpose_code(parent));
    std::size_t n = parent.n, m = parent.m;

    auto swap_blocks = [&](const BitMatrix& mat) {
        std::vector<std::pair<std::size_t, std::size_t>> entries;
        for (auto [r, c] : mat.entries()) {
            std::size_t mapped = c < n * n ? c + m * m : c - n * n;
            entries.emplace_back(r, mapped);
        }
        return BitMatrix::from_entries(mat.rows(), mat.cols(), std::move(entries));
    };
    CHECK(swap_blocks(code.hx) == mirror.hz);
    CHECK(swap_blocks(code.hz) == mirror.hx);
}

TEST_CASE("build_code families") {
    auto surface = build_code({.family = "surface", .n = 3});
    CHECK(surface.params.n == 13);
    CHECK(surface.params.k == 1);
    CHECK(surface.distance == 3);

    auto toric = build_code({.family = "toric", .n = 3});
    CHECK(toric.params.n == 18);
    CHECK(toric.params.k == 2);
    CHECK(toric.distance == 3);
    CHECK(toric.params.mean_check_weight == doctest::Approx(4.0));

    CodeSpec rnd;
    rnd.family = "random-hgp";
    rnd.n = 16;
    rnd.col_weight = 3;
    rnd.row_weight = 4;
    rnd.seed = 11;
    auto random = build_code(rnd);
    CHECK(random.params.n == 400);
    CHECK(random.params.k == 16);
    CHECK(random.params.rate == doctest::Approx(0.04));
    CHECK(random.params.mean_check_weight == doctest::Approx(7.0));

    CodeSpec semi;
    semi.family = "semi-topological";
    semi.parent_n = 3;
    semi.g = 1;
    auto aug = build_code(semi);
    CHECK(aug.params.n == 145);
    CHECK(aug.params.k == 5);
    CHECK(aug.params.mean_check_weight == doctest::Approx(4.25));

    CHECK_THROWS_AS(build_code({.family = "color"}), std::invalid_argument);
}
