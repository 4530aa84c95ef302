#include "qldpc/families.hpp"

#include <stdexcept>

namespace qldpc {
namespace {

/// Exact distances for the quantum parameter report, where the kernel
/// enumeration is affordable; otherwise left as declared/unknown.
void fill_distance_by_oracle(ClassicalCode& code, std::size_t budget = 16) {
    if (!code.d.is_unknown() || code.k > budget) return;
    code.d = min_distance_bruteforce(code, SIZE_MAX, budget);
}

}  // namespace

ClassicalCode semi_topological_parent(std::size_t parent_n, std::size_t g) {
    if (parent_n < 2) throw std::invalid_argument("semi-topological: parent length must be >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t c = 0; c < parent_n; ++c) {
        entries.emplace_back(0, c);
        entries.emplace_back(1, c);
    }
    auto base = ClassicalCode::from_matrix(BitMatrix::from_entries(2, parent_n, std::move(entries)));
    return augment_edges(base, g);
}

BuiltCode build_code(const CodeSpec& spec) {
    BuiltCode built;
    if (spec.family == "surface") {
        built.parent = repetition_code(spec.n, /*closed=*/false);
        built.id = "surface-" + std::to_string(spec.n);
    } else if (spec.family == "toric") {
        built.parent = repetition_code(spec.n, /*closed=*/true);
        built.id = "toric-" + std::to_string(spec.n);
    } else if (spec.family == "random-hgp") {
        MackayNealOptions opts;
        opts.require_full_rank = true;
        built.parent =
            mackay_neal_ldpc(spec.n, spec.col_weight, spec.row_weight, spec.seed, opts);
        fill_distance_by_oracle(built.parent);
        built.id = "random-hgp-" + std::to_string(spec.n) + "-" + std::to_string(spec.col_weight) +
                   "-" + std::to_string(spec.row_weight) + "-s" + std::to_string(spec.seed);
    } else if (spec.family == "semi-topological") {
        built.parent = semi_topological_parent(spec.parent_n, spec.g);
        fill_distance_by_oracle(built.parent);
        built.id = "semi-topological-g" + std::to_string(spec.g) + "-p" +
                   std::to_string(spec.parent_n);
    } else {
        throw std::invalid_argument("unknown code family: " + spec.family);
    }

    built.code = hgp_symmetric(built.parent);

    // The transpose distance feeds min(d, d^T); compute it when cheap.
    auto transposed = transpose_code(built.parent);
    fill_distance_by_oracle(transposed);
    built.params = css_params(built.code, CodeDistance::unknown());
    if (built.parent.d.is_known() && transposed.d.is_infinite()) {
        built.params.d = built.parent.d;
    } else if (built.parent.d.is_known() && transposed.d.is_known()) {
        built.params.d =
            CodeDistance::known(std::min(built.parent.d.value(), transposed.d.value()));
    }
    built.distance = built.params.d.is_known() ? built.params.d.value() : 0;
    return built;
}

}  // namespace qldpc
