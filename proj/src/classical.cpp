#include "qldpc/classical.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "qldpc/gf2_solve.hpp"

namespace qldpc {

ClassicalCode ClassicalCode::from_matrix(BitMatrix H, CodeDistance d) {
    ClassicalCode code;
    code.n = H.cols();
    code.m = H.rows();
    code.k = code.n - rank(H);
    code.d = d;
    code.H = std::move(H);
    return code;
}

AugmentationSpec AugmentationSpec::for_parent(const ClassicalCode& parent, std::size_t g) {
    AugmentationSpec spec;
    spec.g = g;
    spec.edge_count = parent.H.nnz();
    spec.mu = parent.H.min_col_weight();
    return spec;
}

ClassicalCode repetition_code(std::size_t n, bool closed) {
    if (n < 2) throw std::invalid_argument("repetition_code: n must be >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    const std::size_t checks = closed ? n : n - 1;
    for (std::size_t i = 0; i < checks; ++i) {
        entries.emplace_back(i, i);
        entries.emplace_back(i, (i + 1) % n);
    }
    return ClassicalCode::from_matrix(BitMatrix::from_entries(checks, n, std::move(entries)),
                                      CodeDistance::known(n));
}

BitMatrix chain_segment_matrix(std::size_t g) {
    if (g < 1) throw std::invalid_argument("chain_segment_matrix: g must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t i = 0; i < g; ++i) {
        entries.emplace_back(i, i);
        if (i + 1 < g) entries.emplace_back(i, i + 1);
    }
    return BitMatrix::from_entries(g, g, std::move(entries));
}

ClassicalCode augment_edges(const ClassicalCode& parent, std::size_t g) {
    if (g == 0) return parent;
    const auto edges = parent.H.entries();  // row-major traversal fixes node ordering
    const std::size_t n = parent.n;
    const std::size_t m = parent.m;
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    entries.reserve(edges.size() * (g + 2));

    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [check, data] = edges[e];
        const std::size_t check_base = m + e * g;
        const std::size_t data_base = n + e * g;
        // Welded path: data -- u1 -- v1 -- u2 -- v2 -- ... -- ug -- vg -- check.
        entries.emplace_back(check_base, data);
        for (std::size_t a = 0; a < g; ++a) {
            entries.emplace_back(check_base + a, data_base + a);
            if (a + 1 < g) entries.emplace_back(check_base + a + 1, data_base + a);
        }
        entries.emplace_back(check, data_base + g - 1);
    }

    const std::size_t grow = g * edges.size();
    return ClassicalCode::from_matrix(
        BitMatrix::from_entries(m + grow, n + grow, std::move(entries)));
}

ClassicalCode mackay_neal_ldpc(std::size_t n, std::size_t col_weight, std::size_t row_weight,
                               std::uint64_t seed, const MackayNealOptions& opts) {
    if (col_weight == 0 || row_weight == 0 || (col_weight * n) % row_weight != 0)
        throw std::invalid_argument("mackay_neal_ldpc: col_weight*n must be divisible by row_weight");
    const std::size_t m = col_weight * n / row_weight;
    if (col_weight > m) throw std::invalid_argument("mackay_neal_ldpc: col_weight exceeds row count");

    std::mt19937_64 rng(seed);
    std::size_t total_retries = 0;

    for (std::size_t restart = 0; restart < opts.matrix_restarts; ++restart) {
        std::vector<std::vector<std::size_t>> cols(n);
        std::vector<std::size_t> row_fill(m, 0);
        std::set<std::pair<std::size_t, std::size_t>> used_pairs;
        bool matrix_ok = true;

        for (std::size_t c = 0; c < n && matrix_ok; ++c) {
            bool column_ok = false;
            for (std::size_t attempt = 0; attempt < opts.column_retries; ++attempt) {
                std::vector<std::size_t> chosen;
                for (std::size_t bit = 0; bit < col_weight; ++bit) {
                    std::vector<std::size_t> eligible;
                    for (std::size_t r = 0; r < m; ++r) {
                        if (row_fill[r] >= row_weight) continue;
                        if (std::find(chosen.begin(), chosen.end(), r) != chosen.end()) continue;
                        bool cycle = false;
                        for (auto prev : chosen) {
                            auto key = std::minmax(prev, r);
                            if (used_pairs.count({key.first, key.second})) { cycle = true; break; }
                        }
                        if (!cycle) eligible.push_back(r);
                    }
                    if (eligible.empty()) break;
                    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
                    chosen.push_back(eligible[pick(rng)]);
                }
                if (chosen.size() == col_weight) {
                    std::sort(chosen.begin(), chosen.end());
                    for (std::size_t a = 0; a < chosen.size(); ++a)
                        for (std::size_t b = a + 1; b < chosen.size(); ++b)
                            used_pairs.insert({chosen[a], chosen[b]});
                    for (auto r : chosen) ++row_fill[r];
                    cols[c] = std::move(chosen);
                    column_ok = true;
                    break;
                }
                ++total_retries;
            }
            if (!column_ok) matrix_ok = false;
        }
        if (!matrix_ok) continue;

        std::vector<std::pair<std::size_t, std::size_t>> entries;
        for (std::size_t c = 0; c < n; ++c)
            for (auto r : cols[c]) entries.emplace_back(r, c);
        auto H = BitMatrix::from_entries(m, n, std::move(entries));
        if (opts.require_full_rank && rank(H) != m) {
            ++total_retries;
            continue;
        }
        return ClassicalCode::from_matrix(std::move(H));
    }
    throw std::runtime_error("mackay_neal_ldpc: construction failed after " +
                             std::to_string(total_retries) + " retries");
}

CodeDistance min_distance_bruteforce(const ClassicalCode& code, std::size_t cap,
                                     std::size_t kernel_dim_budget) {
    auto basis = kernel_basis(code.H);
    const std::size_t k = basis.size();
    if (k == 0) return CodeDistance::infinite();
    if (k > kernel_dim_budget)
        throw std::runtime_error("min_distance_bruteforce: kernel dimension " + std::to_string(k) +
                                 " exceeds budget " + std::to_string(kernel_dim_budget));

    std::vector<std::vector<std::uint64_t>> packed;
    packed.reserve(k);
    for (const auto& v : basis) packed.push_back(gf2::pack_vector(v));
    const std::size_t words = packed[0].size();

    // Gray-code walk over all nonzero kernel combinations.
    std::vector<std::uint64_t> current(words, 0);
    std::size_t best = SIZE_MAX;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const unsigned flip = std::countr_zero(idx);
        for (std::size_t w = 0; w < words; ++w) current[w] ^= packed[flip][w];
        std::size_t weight = 0;
        for (std::size_t w = 0; w < words; ++w) weight += std::popcount(current[w]);
        best = std::min(best, weight);
    }
    if (best > cap) return CodeDistance::unknown();
    return CodeDistance::known(best);
}

ClassicalCode transpose_code(const ClassicalCode& code) {
    auto t = ClassicalCode::from_matrix(code.H.transpose());
    if (t.k == 0) t.d = CodeDistance::infinite();
    return t;
}

}  // namespace qldpc
