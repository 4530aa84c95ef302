#include "qldpc/io.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qldpc {
namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("alist parse error at line " + std::to_string(line) + ": " + what);
}

struct LineReader {
    std::istream& in;
    std::size_t line_no = 0;

    std::vector<long long> next_ints() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            std::vector<long long> values;
            long long v;
            while (ss >> v) values.push_back(v);
            std::string tail;
            if (ss.clear(), ss >> tail) parse_fail(line_no, "non-integer token '" + tail + "'");
            if (!values.empty()) return values;
        }
        parse_fail(line_no + 1, "unexpected end of file");
    }
};

}  // namespace

void write_alist(std::ostream& out, const BitMatrix& m) {
    const std::size_t n = m.cols();
    const std::size_t rows = m.rows();
    const std::size_t max_col = m.max_col_weight();
    const std::size_t max_row = m.max_row_weight();
    out << n << ' ' << rows << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < n; ++c) out << m.col_weight(c) << (c + 1 < n ? ' ' : '\n');
    if (n == 0) out << '\n';
    for (std::size_t r = 0; r < rows; ++r) out << m.row_weight(r) << (r + 1 < rows ? ' ' : '\n');
    if (rows == 0) out << '\n';
    for (std::size_t c = 0; c < n; ++c) {
        auto col = m.col(c);
        for (std::size_t i = 0; i < max_col; ++i)
            out << (i < col.size() ? col[i] + 1 : 0) << (i + 1 < max_col ? ' ' : '\n');
    }
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = m.row(r);
        for (std::size_t i = 0; i < max_row; ++i)
            out << (i < row.size() ? row[i] + 1 : 0) << (i + 1 < max_row ? ' ' : '\n');
    }
}

void write_alist_file(const std::string& path, const BitMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_alist(out, m);
}

BitMatrix read_alist(std::istream& in) {
    LineReader reader{in};

    auto dims = reader.next_ints();
    if (dims.size() != 2 || dims[0] < 0 || dims[1] < 0) parse_fail(reader.line_no, "expected 'n m'");
    const std::size_t n = static_cast<std::size_t>(dims[0]);
    const std::size_t m = static_cast<std::size_t>(dims[1]);

    auto maxima = reader.next_ints();
    if (maxima.size() != 2 || maxima[0] < 0 || maxima[1] < 0)
        parse_fail(reader.line_no, "expected 'max_col_weight max_row_weight'");
    const std::size_t max_col = static_cast<std::size_t>(maxima[0]);
    const std::size_t max_row = static_cast<std::size_t>(maxima[1]);

    auto read_weights = [&](std::size_t count, std::size_t max_weight, const char* what) {
        std::vector<std::size_t> weights;
        while (weights.size() < count) {
            for (auto v : reader.next_ints()) {
                if (v < 0 || static_cast<std::size_t>(v) > max_weight)
                    parse_fail(reader.line_no, std::string(what) + " weight out of range");
                weights.push_back(static_cast<std::size_t>(v));
            }
        }
        if (weights.size() != count) parse_fail(reader.line_no, std::string(what) + " weight count");
        return weights;
    };
    const auto col_weights = read_weights(n, max_col, "column");
    const auto row_weights = read_weights(m, max_row, "row");

    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t c = 0; c < n; ++c) {
        auto values = reader.next_ints();
        if (values.size() != max_col && values.size() != col_weights[c])
            parse_fail(reader.line_no, "column entry count mismatch");
        std::size_t nonzero = 0;
        for (auto v : values) {
            if (v < 0 || static_cast<std::size_t>(v) > m)
                parse_fail(reader.line_no, "row index out of range");
            if (v == 0) continue;
            entries.emplace_back(static_cast<std::size_t>(v) - 1, c);
            ++nonzero;
        }
        if (nonzero != col_weights[c]) parse_fail(reader.line_no, "column weight mismatch");
    }
    // Row adjacency section: read and cross-check against the column section.
    for (std::size_t r = 0; r < m; ++r) {
        auto values = reader.next_ints();
        if (values.size() != max_row && values.size() != row_weights[r])
            parse_fail(reader.line_no, "row entry count mismatch");
        std::size_t nonzero = 0;
        for (auto v : values) {
            if (v < 0 || static_cast<std::size_t>(v) > static_cast<long long>(n))
                parse_fail(reader.line_no, "column index out of range");
            if (v != 0) ++nonzero;
        }
        if (nonzero != row_weights[r]) parse_fail(reader.line_no, "row weight mismatch");
    }

    auto result = BitMatrix::from_entries(m, n, std::move(entries));
    if (result.nnz() !=
        static_cast<std::size_t>(std::accumulate(row_weights.begin(), row_weights.end(), 0LL)))
        throw std::runtime_error("alist parse error: row/column sections disagree");
    return result;
}

BitMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_alist(in);
}

void write_csv_header(std::ostream& out) {
    out << "code_id,n,k,d,p,trials,failures,p_L,ci_low,ci_high,decoder,lambda,seed\n";
}

void write_csv_row(std::ostream& out, const CsvRow& row) {
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    out << row.code_id << ',' << row.n << ',' << row.k << ',' << row.d << ',' << fmt(row.p) << ','
        << row.trials << ',' << row.failures << ',' << fmt(row.p_l) << ',' << fmt(row.ci_low)
        << ',' << fmt(row.ci_high) << ',' << row.decoder << ',' << row.lambda << ',' << row.seed
        << '\n';
}

std::vector<CsvRow> curves_to_csv_rows(const std::vector<Curve>& curves,
                                       const std::string& decoder, std::size_t lambda,
                                       std::uint64_t seed) {
    std::vector<CsvRow> rows;
    for (const auto& curve : curves) {
        for (const auto& pt : curve.points) {
            CsvRow row;
            row.code_id = curve.code_id;
            row.n = curve.n;
            row.k = curve.k;
            row.d = curve.d;
            row.p = pt.p;
            row.trials = pt.stats.trials;
            row.failures = pt.stats.failures;
            row.p_l = pt.stats.logical_error_rate;
            row.ci_low = pt.stats.ci_low;
            row.ci_high = pt.stats.ci_high;
            row.decoder = decoder;
            row.lambda = lambda;
            row.seed = seed;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace qldpc
