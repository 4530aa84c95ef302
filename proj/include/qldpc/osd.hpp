#pragma once

#include "qldpc/gf2.hpp"

namespace qldpc {

enum class OsdStrategy { osd0, combination_sweep, exhaustive };

struct OsdConfig {
    OsdStrategy strategy = OsdStrategy::combination_sweep;
    std::size_t search_depth = 60;  // lambda; clamped to |T| for sweep prefixes
};

/// Bit indices sorted most-to-least likely flipped: stable ascending sort on
/// the LLRs, ties broken by ascending index.
std::vector<std::size_t> rank_bits(std::span<const double> soft_decisions);

/// Reliability-ordered split of the bit indices: the ranked order, the greedy
/// rank(H)-sized independent basis [S], and the remainder [T] (still in
/// ranked order, most probable first).
struct IndexPartition {
    std::vector<std::size_t> order;
    std::vector<std::size_t> basis;
    std::vector<std::size_t> remainder;
};

IndexPartition make_partition(const BitMatrix& H, std::span<const double> soft_decisions);

/// Number of encoding-operator inputs a strategy examines (the e_T = 0 base
/// solution is not counted for the sweep; the exhaustive count includes it).
std::size_t osd_candidate_count(const OsdConfig& config, std::size_t remainder_size);

/// Ordered-statistics post-processing over a fixed check matrix. Stateless
/// between calls; per-decode scratch is private, so distinct instances (or
/// the free functions) can run concurrently.
class OsdDecoder {
public:
    explicit OsdDecoder(const BitMatrix& H);

    /// Minimum-weight candidate over {e_T = 0} plus the strategy set, mapped
    /// back to the original bit ordering. Always satisfies H e = s.
    /// Throws std::runtime_error when s is not in the column space of H.
    BitVector decode(const BitVector& syndrome, std::span<const double> soft_decisions,
                     const OsdConfig& config) const;

    const BitMatrix& matrix() const { return H_; }
    std::size_t rank() const { return rank_; }

private:
    BitMatrix H_;
    std::size_t rank_;
};

/// OSD-0: solve on the most-reliable basis, remainder bits zero.
BitVector osd0(const BitMatrix& H, const BitVector& s, std::span<const double> soft_decisions);

/// Encoding operator: full-length solution whose T-part equals
/// e_T and whose S-part is H_[S]^{-1}(s + H_[T] e_T). Satisfies H e = s for
/// every e_T. e_T is indexed against partition.remainder.
BitVector osd_encode(const BitMatrix& H, const IndexPartition& partition, const BitVector& s,
                     const BitVector& e_T);

/// Full strategy search (OSD-0 base plus sweep or exhaustive candidates).
BitVector osd_search(const BitMatrix& H, const BitVector& s,
                     std::span<const double> soft_decisions, const OsdConfig& config);

}  // namespace qldpc
