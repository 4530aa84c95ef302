#pragma once

#include <iosfwd>
#include <string>

#include "qldpc/gf2.hpp"
#include "qldpc/sim.hpp"

namespace qldpc {

/// MacKay alist sparse-matrix text format. Layout:
///   n m
///   max_col_weight max_row_weight
///   n column weights / m row weights
///   n lines of 1-indexed row positions per column (zero-padded)
///   m lines of 1-indexed column positions per row (zero-padded)
void write_alist(std::ostream& out, const BitMatrix& m);
void write_alist_file(const std::string& path, const BitMatrix& m);

/// Throws std::runtime_error with a line number on malformed input.
BitMatrix read_alist(std::istream& in);
BitMatrix read_alist_file(const std::string& path);

struct CsvRow {
    std::string code_id;
    std::size_t n = 0, k = 0, d = 0;
    double p = 0.0;
    std::size_t trials = 0, failures = 0;
    double p_l = 0.0, ci_low = 0.0, ci_high = 0.0;
    std::string decoder;
    std::size_t lambda = 0;
    std::uint64_t seed = 0;
};

/// Deterministic fixed-format serialization (no wall time, no locale).
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const CsvRow& row);

std::vector<CsvRow> curves_to_csv_rows(const std::vector<Curve>& curves,
                                       const std::string& decoder, std::size_t lambda,
                                       std::uint64_t seed);

}  // namespace qldpc
