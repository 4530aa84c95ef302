#pragma once

#include <cstdint>

namespace qldpc {

/// Counter-derived random stream: the state is a pure function of
/// (master_seed, stream_index), so trial results cannot depend on how trials
/// are distributed across workers.
class TrialRng {
public:
    TrialRng(std::uint64_t master_seed, std::uint64_t stream_index)
        : state_(mix(master_seed ^ splitmix(stream_index + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix(state_);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t splitmix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t mix(std::uint64_t z) { return splitmix(z + 0x9e3779b97f4a7c15ULL); }

    std::uint64_t state_;
};

}  // namespace qldpc
