#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qldpc/families.hpp"
#include "qldpc/io.hpp"
#include "qldpc/sim.hpp"

using json = nlohmann::json;
using namespace qldpc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct ConstructArgs {
    CodeSpec spec;
    std::string out = ".";
};

struct DecodeArgs {
    std::string matrix_path;
    std::string syndrome;
    std::string decoder = "bp-osd-cs";
    std::size_t lambda = 60;
    std::size_t max_iter = 0;
    std::string scaling = "on";
    double p = 0.05;
};

struct SweepArgs {
    std::string manifest_path;
    std::string out_override;
    std::size_t trials_override = 0;
    std::size_t workers_override = 0;
    bool has_seed_override = false;
    std::uint64_t seed_override = 0;
};

json spec_to_json(const CodeSpec& spec) {
    json j;
    j["family"] = spec.family;
    if (spec.family == "surface" || spec.family == "toric" || spec.family == "random-hgp")
        j["n"] = spec.n;
    if (spec.family == "semi-topological") {
        j["g"] = spec.g;
        j["parent_n"] = spec.parent_n;
    }
    if (spec.family == "random-hgp") {
        j["col_weight"] = spec.col_weight;
        j["row_weight"] = spec.row_weight;
        j["seed"] = spec.seed;
    }
    return j;
}

CodeSpec spec_from_json(const json& j) {
    CodeSpec spec;
    spec.family = j.at("family").get<std::string>();
    if (j.contains("n")) spec.n = j["n"].get<std::size_t>();
    if (j.contains("g")) spec.g = j["g"].get<std::size_t>();
    if (j.contains("parent_n")) spec.parent_n = j["parent_n"].get<std::size_t>();
    if (j.contains("col_weight")) spec.col_weight = j["col_weight"].get<std::size_t>();
    if (j.contains("row_weight")) spec.row_weight = j["row_weight"].get<std::size_t>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    return spec;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
}

int cmd_construct(const ConstructArgs& args) {
    auto built = build_code(args.spec);
    std::filesystem::create_directories(args.out);
    std::filesystem::path dir(args.out);

    write_alist_file((dir / "hx.alist").string(), built.code.hx);
    write_alist_file((dir / "hz.alist").string(), built.code.hz);
    write_alist_file((dir / "lx.alist").string(), built.code.lx);
    write_alist_file((dir / "lz.alist").string(), built.code.lz);

    json summary;
    summary["code_id"] = built.id;
    summary["n"] = built.params.n;
    summary["k"] = built.params.k;
    if (built.params.d.is_known()) summary["d"] = built.params.d.value();
    summary["rate"] = built.params.rate;
    summary["mean_check_weight"] = built.params.mean_check_weight;
    summary["max_col_weight"] = built.params.max_col_weight;
    summary["max_row_weight"] = built.params.max_row_weight;
    write_text_file(dir / "params.json", summary.dump(2) + "\n");

    json manifest;
    manifest["command"] = "construct";
    manifest["code"] = spec_to_json(args.spec);
    manifest["out"] = args.out;
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");

    std::cout << built.id << ": [[" << built.params.n << "," << built.params.k << ",";
    if (built.params.d.is_known()) std::cout << built.params.d.value();
    else std::cout << "-";
    std::cout << "]] rate=" << built.params.rate
              << " mean_check_weight=" << built.params.mean_check_weight
              << " max_col_weight=" << built.params.max_col_weight
              << " max_row_weight=" << built.params.max_row_weight << "\n";
    std::cout << "wrote hx.alist hz.alist lx.alist lz.alist params.json manifest.json to "
              << args.out << "\n";
    return kExitOk;
}

BitVector parse_syndrome(const std::string& text, std::size_t expected_len) {
    BitVector s(expected_len);
    if (text.find_first_not_of("01") == std::string::npos && !text.empty()) {
        if (text.size() != expected_len)
            throw std::runtime_error("syndrome length " + std::to_string(text.size()) +
                                     " does not match check count " +
                                     std::to_string(expected_len));
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] == '1') s.support.push_back(i);
        return s;
    }
    // Comma-separated support indices.
    std::string token;
    std::istringstream ss(text);
    std::vector<std::size_t> support;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = std::stoull(token, &pos);
        if (pos != token.size()) throw std::runtime_error("bad syndrome token: " + token);
        if (v >= expected_len)
            throw std::runtime_error("syndrome index " + token + " out of range");
        support.push_back(static_cast<std::size_t>(v));
    }
    return BitVector(expected_len, std::move(support));
}

DecoderConfig decoder_config_from(const std::string& decoder, std::size_t lambda,
                                  std::size_t max_iter, const std::string& scaling) {
    auto kind = parse_decoder_kind(decoder);
    if (!kind) throw std::runtime_error("unknown decoder: " + decoder);
    if (scaling != "on" && scaling != "off")
        throw std::runtime_error("scaling must be 'on' or 'off'");
    DecoderConfig config;
    config.kind = *kind;
    config.search_depth = lambda;
    config.max_iterations = max_iter;
    config.scaling = scaling == "on" ? BpScaling::iteration_scaled : BpScaling::none;
    return config;
}

int cmd_decode(const DecodeArgs& args) {
    auto H = read_alist_file(args.matrix_path);
    auto s = parse_syndrome(args.syndrome, H.rows());
    auto config = decoder_config_from(args.decoder, args.lambda, args.max_iter, args.scaling);

    BpDecoder bp(H);
    auto bp_result = bp.decode(s, config.bp_config(args.p));
    BitVector correction;
    if (bp_result.converged || !config.uses_osd()) {
        correction = bp_result.hard_decision;
        std::cout << (bp_result.converged ? "bp converged" : "bp failed") << " iter="
                  << bp_result.iterations_used << "\n";
    } else {
        OsdDecoder osd(H);
        auto osd_config = config.osd_config();
        std::size_t k_prime = H.cols() - osd.rank();
        std::cout << "bp failed; " << args.decoder << " candidates="
                  << osd_candidate_count(osd_config, k_prime) << "\n";
        correction = osd.decode(s, bp_result.soft_decisions, osd_config);
    }

    std::cout << "correction weight=" << correction.weight() << " support=[";
    for (std::size_t i = 0; i < correction.support.size(); ++i)
        std::cout << (i ? "," : "") << correction.support[i];
    std::cout << "]\n";
    bool satisfied = mat_vec(H, correction) == s;
    std::cout << "syndrome " << (satisfied ? "satisfied" : "NOT satisfied") << "\n";
    return satisfied ? kExitOk : kExitData;
}

int cmd_sweep(const SweepArgs& args) {
    std::ifstream in(args.manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + args.manifest_path);
    json manifest = json::parse(in);

    if (!manifest.contains("codes") || !manifest["codes"].is_array() ||
        manifest["codes"].empty())
        throw std::runtime_error("manifest must list at least one code");
    if (!manifest.contains("p_grid") || !manifest["p_grid"].is_array() ||
        manifest["p_grid"].empty())
        throw std::runtime_error("manifest must provide a p_grid array");

    std::vector<double> p_grid = manifest["p_grid"].get<std::vector<double>>();
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        if (p_grid[i] <= p_grid[i - 1]) throw std::runtime_error("p_grid must be increasing");

    std::size_t trials = manifest.value("trials", std::size_t{10000});
    std::uint64_t seed = manifest.value("seed", std::uint64_t{0});
    std::size_t workers = manifest.value("workers", std::size_t{1});
    std::string decoder = manifest.value("decoder", std::string("bp-osd-cs"));
    std::size_t lambda = manifest.value("lambda", std::size_t{60});
    std::size_t max_iter = manifest.value("max_iter", std::size_t{0});
    std::string scaling = manifest.value("scaling", std::string("on"));
    std::string out_path = manifest.value("out", std::string("sweep.csv"));

    if (args.trials_override) trials = args.trials_override;
    if (args.workers_override) workers = args.workers_override;
    if (args.has_seed_override) seed = args.seed_override;
    if (!args.out_override.empty()) out_path = args.out_override;

    auto config = decoder_config_from(decoder, lambda, max_iter, scaling);

    std::vector<BuiltCode> built;
    for (const auto& code_json : manifest["codes"]) built.push_back(build_code(spec_from_json(code_json)));
    std::vector<SweepInput> inputs;
    for (const auto& b : built) inputs.push_back({&b.code, b.id, b.distance});

    auto result = sweep_and_estimate_threshold(inputs, p_grid, trials, seed, config, workers);

    std::ofstream csv(out_path);
    if (!csv) throw std::runtime_error("cannot open for writing: " + out_path);
    write_csv_header(csv);
    for (const auto& row : curves_to_csv_rows(result.curves, decoder_kind_name(config.kind),
                                              lambda, seed))
        write_csv_row(csv, row);
    csv.close();

    // Replay manifest: the fully resolved configuration.
    json replay;
    replay["command"] = "sweep";
    replay["codes"] = json::array();
    for (const auto& code_json : manifest["codes"])
        replay["codes"].push_back(spec_to_json(spec_from_json(code_json)));
    replay["p_grid"] = p_grid;
    replay["trials"] = trials;
    replay["seed"] = seed;
    replay["workers"] = workers;
    replay["decoder"] = decoder_kind_name(config.kind);
    replay["lambda"] = lambda;
    replay["max_iter"] = max_iter;
    replay["scaling"] = scaling;
    replay["out"] = out_path;
    write_text_file(out_path + ".manifest.json", replay.dump(2) + "\n");

    std::cout << "wrote " << out_path << " (" << result.curves.size() << " curves, "
              << p_grid.size() << " points each)\n";
    if (inputs.size() < 2) {
        std::cout << "threshold: n/a (single code)\n";
    } else if (result.threshold.has_crossing) {
        std::cout << "threshold: crossing interval [" << result.threshold.low << ", "
                  << result.threshold.high << "]\n";
    } else {
        std::cout << "threshold: no crossing\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph-product QLDPC codes: construction, BP+OSD decoding, sweeps"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "build a code and write alist files");
    construct->add_option("--code", cargs.spec.family, "surface|toric|random-hgp|semi-topological")
        ->required();
    construct->add_option("--n", cargs.spec.n, "block/ring length");
    construct->add_option("--g", cargs.spec.g, "augmentation chain length");
    construct->add_option("--parent-n", cargs.spec.parent_n, "semi-topological parent length");
    construct->add_option("--col-weight", cargs.spec.col_weight, "LDPC column weight");
    construct->add_option("--row-weight", cargs.spec.row_weight, "LDPC row weight");
    construct->add_option("--seed", cargs.spec.seed, "LDPC construction seed");
    construct->add_option("--out", cargs.out, "output directory");

    DecodeArgs dargs;
    auto* decode = app.add_subcommand("decode", "decode one syndrome against an alist matrix");
    decode->add_option("--matrix", dargs.matrix_path, "alist parity-check matrix")->required();
    decode->add_option("--syndrome", dargs.syndrome, "bitstring or comma-separated indices")
        ->required();
    decode->add_option("--decoder", dargs.decoder, "bp|bp-osd0|bp-osd-cs|bp-osd-e");
    decode->add_option("--lambda", dargs.lambda, "OSD search depth");
    decode->add_option("--max-iter", dargs.max_iter, "BP iteration cap (0 = block length)");
    decode->add_option("--scaling", dargs.scaling, "message scaling: on|off");
    decode->add_option("--p", dargs.p, "channel error rate prior");

    SweepArgs sargs;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep driven by a JSON manifest");
    sweep->add_option("--manifest", sargs.manifest_path, "JSON run manifest")->required();
    sweep->add_option("--trials", sargs.trials_override, "override manifest trial count");
    sweep->add_option("--workers", sargs.workers_override, "override manifest worker count");
    auto* seed_opt = sweep->add_option("--seed", sargs.seed_override, "override manifest seed");
    sweep->add_option("--out", sargs.out_override, "override manifest CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    sargs.has_seed_override = seed_opt->count() > 0;

    try {
        if (construct->parsed()) return cmd_construct(cargs);
        if (decode->parsed()) return cmd_decode(dargs);
        if (sweep->parsed()) return cmd_sweep(sargs);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
