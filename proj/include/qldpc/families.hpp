#pragma once

#include <string>

#include "qldpc/css.hpp"

namespace qldpc {

/// Parameters selecting one concrete code from the supported families:
/// surface, toric, random-hgp, semi-topological.
struct CodeSpec {
    std::string family;
    std::size_t n = 3;           // repetition/ring length, or LDPC block length
    std::size_t g = 1;           // augmentation parameter (semi-topological)
    std::size_t parent_n = 3;    // parent block length (semi-topological)
    std::size_t col_weight = 3;  // random-hgp
    std::size_t row_weight = 4;  // random-hgp
    std::uint64_t seed = 0;      // random-hgp
};

struct BuiltCode {
    std::string id;
    CssCode code;
    ClassicalCode parent;
    QuantumParams params;
    std::size_t distance = 0;  // 0 when unknown
};

/// Parent code of the semi-topological family: parent_n data bits checked by
/// two identical all-ones parity rows, then edge-augmented with parameter g.
ClassicalCode semi_topological_parent(std::size_t parent_n, std::size_t g);

/// Throws std::invalid_argument on unknown family or bad parameters.
BuiltCode build_code(const CodeSpec& spec);

}  // namespace qldpc
