#include "qldpc/osd.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "qldpc/gf2_solve.hpp"

namespace qldpc {
namespace {

constexpr std::size_t kExhaustiveDepthBudget = 24;

std::size_t popcount_words(const std::vector<std::uint64_t>& words) {
    std::size_t total = 0;
    for (auto w : words) total += std::popcount(w);
    return total;
}

}  // namespace

std::vector<std::size_t> rank_bits(std::span<const double> soft_decisions) {
    std::vector<std::size_t> order(soft_decisions.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return soft_decisions[a] < soft_decisions[b]; });
    return order;
}

IndexPartition make_partition(const BitMatrix& H, std::span<const double> soft_decisions) {
    if (soft_decisions.size() != H.cols())
        throw std::invalid_argument("make_partition: one soft decision per bit required");
    IndexPartition part;
    part.order = rank_bits(soft_decisions);
    part.basis = pivot_columns(H, part.order);
    std::vector<bool> in_basis(H.cols(), false);
    for (auto b : part.basis) in_basis[b] = true;
    for (auto idx : part.order)
        if (!in_basis[idx]) part.remainder.push_back(idx);
    return part;
}

std::size_t osd_candidate_count(const OsdConfig& config, std::size_t remainder_size) {
    const std::size_t depth = std::min(config.search_depth, remainder_size);
    switch (config.strategy) {
        case OsdStrategy::osd0:
            return 1;
        case OsdStrategy::combination_sweep:
            return remainder_size + depth * (depth - (depth > 0 ? 1 : 0)) / 2;
        case OsdStrategy::exhaustive:
            if (depth > kExhaustiveDepthBudget)
                throw std::invalid_argument("osd_candidate_count: exhaustive depth over budget");
            return std::size_t{1} << depth;
    }
    return 0;
}

OsdDecoder::OsdDecoder(const BitMatrix& H) : H_(H), rank_(qldpc::rank(H)) {}

BitVector OsdDecoder::decode(const BitVector& syndrome, std::span<const double> soft_decisions,
                             const OsdConfig& config) const {
    const std::size_t n = H_.cols();
    const std::size_t m = H_.rows();
    if (syndrome.len != m) throw std::invalid_argument("OsdDecoder: syndrome length mismatch");
    if (soft_decisions.size() != n)
        throw std::invalid_argument("OsdDecoder: one soft decision per bit required");

    const auto order = rank_bits(soft_decisions);

    // Reduce H (columns in ranked order) with s as an augmented column; the
    // non-pivot columns then directly hold H_[S]^{-1} H_[T].
    gf2::PackedMatrix work(m, n + 1);
    {
        std::vector<std::size_t> where(n);
        for (std::size_t pos = 0; pos < n; ++pos) where[order[pos]] = pos;
        for (std::size_t r = 0; r < m; ++r)
            for (auto c : H_.row(r)) work.set(r, where[c]);
        for (auto r : syndrome.support) work.set(r, n);
    }
    const auto pivots = gf2::rref_in_place(work, n);
    const std::size_t r = pivots.size();
    for (std::size_t row = r; row < m; ++row)
        if (work.get(row, n))
            throw std::runtime_error("OsdDecoder: syndrome outside column space of H");

    std::vector<std::size_t> basis(r);
    for (std::size_t i = 0; i < r; ++i) basis[i] = order[pivots[i]];
    std::vector<std::size_t> remainder_pos;  // permuted column positions, ranked order
    {
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::size_t pos = 0; pos < n; ++pos)
            if (!is_pivot[pos]) remainder_pos.push_back(pos);
    }
    const std::size_t k_prime = remainder_pos.size();

    const std::size_t words = r == 0 ? 1 : (r + 63) / 64;
    std::vector<std::uint64_t> base(words, 0);
    for (std::size_t i = 0; i < r; ++i)
        if (work.get(i, n)) base[i / 64] |= std::uint64_t{1} << (i % 64);

    std::vector<std::size_t> chosen;  // remainder indices of the winning e_T
    if (config.strategy != OsdStrategy::osd0 && k_prime > 0) {
        const std::size_t depth = std::min(config.search_depth, k_prime);
        const std::size_t needed =
            config.strategy == OsdStrategy::combination_sweep ? k_prime : depth;
        std::vector<std::vector<std::uint64_t>> u(needed, std::vector<std::uint64_t>(words, 0));
        for (std::size_t t = 0; t < needed; ++t)
            for (std::size_t i = 0; i < r; ++i)
                if (work.get(i, remainder_pos[t])) u[t][i / 64] |= std::uint64_t{1} << (i % 64);

        std::size_t best = popcount_words(base);  // e_T = 0 is always in the set
        std::vector<std::uint64_t> scratch(words);
        if (config.strategy == OsdStrategy::combination_sweep) {
            for (std::size_t t = 0; t < k_prime; ++t) {
                for (std::size_t w = 0; w < words; ++w) scratch[w] = base[w] ^ u[t][w];
                const std::size_t weight = popcount_words(scratch) + 1;
                if (weight < best) {
                    best = weight;
                    chosen = {t};
                }
            }
            for (std::size_t a = 0; a + 1 < depth; ++a) {
                for (std::size_t b = a + 1; b < depth; ++b) {
                    for (std::size_t w = 0; w < words; ++w) scratch[w] = base[w] ^ u[a][w] ^ u[b][w];
                    const std::size_t weight = popcount_words(scratch) + 2;
                    if (weight < best) {
                        best = weight;
                        chosen = {a, b};
                    }
                }
            }
        } else {
            if (depth > kExhaustiveDepthBudget)
                throw std::invalid_argument("OsdDecoder: exhaustive depth over budget");
            std::vector<std::uint64_t> current = base;
            std::uint64_t mask = 0;
            const std::uint64_t total = std::uint64_t{1} << depth;
            std::uint64_t best_mask = 0;
            for (std::uint64_t idx = 1; idx < total; ++idx) {
                const unsigned flip = std::countr_zero(idx);
                mask ^= std::uint64_t{1} << flip;
                for (std::size_t w = 0; w < words; ++w) current[w] ^= u[flip][w];
                const std::size_t weight =
                    popcount_words(current) + static_cast<std::size_t>(std::popcount(mask));
                if (weight < best) {
                    best = weight;
                    best_mask = mask;
                }
            }
            for (unsigned t = 0; t < depth; ++t)
                if ((best_mask >> t) & 1u) chosen.push_back(t);
        }
    }

    // Reassemble the winner in the original bit ordering.
    std::vector<std::uint64_t> e_s = base;
    std::vector<bool> bits(n, false);
    for (auto t : chosen) {
        bits[order[remainder_pos[t]]] = true;
        for (std::size_t i = 0; i < r; ++i)
            if (work.get(i, remainder_pos[t])) e_s[i / 64] ^= std::uint64_t{1} << (i % 64);
    }
    for (std::size_t i = 0; i < r; ++i)
        if ((e_s[i / 64] >> (i % 64)) & 1u) bits[basis[i]] = true;
    return BitVector::from_bools(bits);
}

BitVector osd0(const BitMatrix& H, const BitVector& s, std::span<const double> soft_decisions) {
    return OsdDecoder(H).decode(s, soft_decisions, {OsdStrategy::osd0, 0});
}

BitVector osd_encode(const BitMatrix& H, const IndexPartition& partition, const BitVector& s,
                     const BitVector& e_T) {
    if (e_T.len != partition.remainder.size())
        throw std::invalid_argument("osd_encode: e_T length must equal |T|");
    BitVector shifted = s;
    for (auto t : e_T.support) {
        BitVector column(H.rows());
        auto col = H.col(partition.remainder[t]);
        column.support.assign(col.begin(), col.end());
        shifted = xor_vec(shifted, column);
    }
    auto e_s = ColumnSolver(H, partition.basis).solve(shifted);
    if (!e_s) throw std::runtime_error("osd_encode: shifted syndrome outside basis span");

    std::vector<bool> bits(H.cols(), false);
    for (auto i : e_s->support) bits[partition.basis[i]] = true;
    for (auto t : e_T.support) bits[partition.remainder[t]] = true;
    return BitVector::from_bools(bits);
}

BitVector osd_search(const BitMatrix& H, const BitVector& s,
                     std::span<const double> soft_decisions, const OsdConfig& config) {
    return OsdDecoder(H).decode(s, soft_decisions, config);
}

}  // namespace qldpc
