#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectralwl/canonicalize.hpp"
#include "spectralwl/config.hpp"
#include "spectralwl/counterexamples.hpp"
#include "spectralwl/eigen.hpp"
#include "spectralwl/equi.hpp"
#include "spectralwl/errors.hpp"
#include "spectralwl/graph_io.hpp"
#include "spectralwl/json_io.hpp"
#include "spectralwl/oracle.hpp"
#include "spectralwl/refine.hpp"
#include "spectralwl/stats.hpp"

namespace fs = std::filesystem;
using namespace spectralwl;

namespace {

constexpr int kExitSeparated = 0;
constexpr int kExitIndistinguishable = 1;
constexpr int kExitError = 2;
constexpr int kExitKMismatch = 3;
constexpr int kExitResourceLimit = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::vector<std::string> collect_files(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& p : paths) {
        fs::path path(p);
        if (fs::is_directory(path)) {
            std::vector<std::string> entries;
            for (const auto& e : fs::directory_iterator(path))
                if (e.is_regular_file()) entries.push_back(e.path().string());
            std::sort(entries.begin(), entries.end());
            files.insert(files.end(), entries.begin(), entries.end());
        } else if (fs::is_regular_file(path)) {
            files.push_back(p);
        } else {
            throw Error("path not found: " + p);
        }
    }
    return files;
}

// Full-spectrum spectral pair of a graph/matrix; requires a simple spectrum.
SpectralPair to_spectral_pair(const LoadedInput& input, const RunConfig& config) {
    if (std::holds_alternative<SpectralPair>(input)) return std::get<SpectralPair>(input);
    SymmetricMatrix m = std::holds_alternative<Graph>(input)
                            ? laplacian(std::get<Graph>(input))
                            : std::get<SymmetricMatrix>(input);
    EigenDecomposition ed = eigendecompose(m);
    return truncate(ed, ed.n, config.eig_tol, TruncateOrder::largest);
}

struct InputPair {
    LoadedInput a;
    LoadedInput b;
};

InputPair load_pair(const std::vector<std::string>& files, const std::string& builtin,
                    const RunConfig& config) {
    if (!builtin.empty()) {
        if (builtin == "epnn-counterexample") {
            auto duo = gen_epnn_counterexample();
            return {duo.first, duo.second};
        }
        if (builtin == "orthonormal-counterexample") {
            auto duo = gen_orthonormal_counterexample();
            return {duo.first, duo.second};
        }
        if (builtin == "oge") {
            auto oge = gen_oge_pair();
            return {oge.l1, oge.l2};
        }
        throw Error("unknown builtin '" + builtin +
                    "'; valid names: epnn-counterexample, orthonormal-counterexample, oge");
    }
    if (files.size() != 2) throw Error("expected two input files (or --builtin)");
    return {load_input_text(read_file(files[0]), config.eig_tol),
            load_input_text(read_file(files[1]), config.eig_tol)};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_stats(const std::vector<std::string>& paths, const RunConfig& config, bool per_graph,
              bool skip_errors) {
    std::vector<std::string> files = collect_files(paths);
    std::vector<Graph> graphs;
    std::vector<std::pair<std::string, std::string>> failures;
    for (const auto& f : files) {
        try {
            std::string text = read_file(f);
            auto start = text.find_first_not_of(" \t\r\n");
            if (start != std::string::npos && text[start] == '[') {
                for (Graph& g : parse_graph_array(text)) graphs.push_back(std::move(g));
                continue;
            }
            LoadedInput input = load_input_text(text, config.eig_tol);
            if (!std::holds_alternative<Graph>(input))
                throw DomainError("not a graph (stats requires graph inputs)");
            graphs.push_back(std::get<Graph>(std::move(input)));
        } catch (const Error& e) {
            failures.emplace_back(f, e.what());
        }
    }
    if (!failures.empty() && !skip_errors) {
        for (const auto& [f, msg] : failures) std::cerr << "error: " << f << ": " << msg << "\n";
        return 1;  // per-file processing failure
    }
    if (graphs.empty()) {
        std::cerr << "no graphs found\n";
        return kExitError;
    }
    if (!failures.empty())
        std::cerr << "warning: skipped " << failures.size() << " unreadable file(s)\n";
    DatasetStatsReport report =
        dataset_report(graphs, config.eig_tol, config.zero_tol, config.workers);
    if (config.output_format == OutputFormat::csv)
        std::cout << report_to_csv(report, per_graph);
    else
        print_json(report_to_json(report, per_graph));
    return 0;
}

int run_separate(const std::vector<std::string>& files, const std::string& builtin,
                 const std::string& mode, const RunConfig& config) {
    InputPair pair = load_pair(files, builtin, config);
    SeparationVerdict verdict;
    if (mode == "wl1") {
        if (!std::holds_alternative<Graph>(pair.a) || !std::holds_alternative<Graph>(pair.b))
            throw Error("wl1 mode requires graph inputs");
        verdict = wl1_distinguish(std::get<Graph>(pair.a), std::get<Graph>(pair.b),
                                  config.max_rounds);
    } else {
        SpectralPair a = to_spectral_pair(pair.a, config);
        SpectralPair b = to_spectral_pair(pair.b, config);
        if (a.k != b.k) {
            std::cerr << "error: K mismatch (" << a.k << " vs " << b.k << ")\n";
            return kExitKMismatch;
        }
        Quantizer q(config.quantizer_scale);
        if (mode == "epnn") {
            verdict = epnn_distinguish(a, b, config.max_rounds, q);
        } else {
            std::vector<UpdateRule> rules = {UpdateRule::proof_rule()};
            for (auto s : config.seeds) rules.push_back(UpdateRule::random_table(s));
            verdict = equi_distinguish(a, b, rules, config.max_rounds, q);
        }
    }
    print_json(verdict_to_json(verdict));
    return verdict.outcome == Outcome::separated ? kExitSeparated : kExitIndistinguishable;
}

int run_iso(const std::vector<std::string>& files, const std::string& builtin,
            const RunConfig& config) {
    InputPair pair = load_pair(files, builtin, config);
    bool a_matrix = std::holds_alternative<SymmetricMatrix>(pair.a);
    bool b_matrix = std::holds_alternative<SymmetricMatrix>(pair.b);
    if (a_matrix != b_matrix) throw Error("cannot mix matrix and non-matrix inputs");
    if (a_matrix) {
        auto witness = perm_isomorphic_matrices(std::get<SymmetricMatrix>(pair.a),
                                                std::get<SymmetricMatrix>(pair.b),
                                                config.zero_tol);
        print_json(witness ? permutation_witness_to_json(*witness) : json(nullptr));
        return witness ? kExitSeparated : kExitIndistinguishable;
    }
    SpectralPair a = to_spectral_pair(pair.a, config);
    SpectralPair b = to_spectral_pair(pair.b, config);
    if (a.k != b.k) {
        std::cerr << "error: K mismatch (" << a.k << " vs " << b.k << ")\n";
        return kExitKMismatch;
    }
    auto witness = find_signed_isomorphism(a, b, config.zero_tol);
    print_json(witness ? witness_to_json(*witness) : json(nullptr));
    return witness ? kExitSeparated : kExitIndistinguishable;
}

int run_canonicalize(const std::string& path, const RunConfig& config, int rounds) {
    Quantizer q(config.quantizer_scale);
    UpdateRule rule = UpdateRule::random_table(config.seeds.empty() ? 1 : config.seeds[0]);
    if (fs::is_directory(path)) {
        std::vector<Graph> graphs;
        for (const auto& f : collect_files({path})) {
            LoadedInput input = load_input_text(read_file(f), config.eig_tol);
            if (!std::holds_alternative<Graph>(input))
                throw Error(f + ": directories must contain graph files");
            graphs.push_back(std::get<Graph>(std::move(input)));
        }
        if (graphs.empty()) {
            std::cerr << "no graphs found\n";
            return kExitError;
        }
        CanonReportOptions options;
        options.eig_tol = config.eig_tol;
        options.sum_tol = config.sum_tol;
        options.match_tol = config.zero_tol;
        options.workers = config.workers;
        CanonReport report = canonicalization_report(graphs, rule, rounds, options, q);
        print_json(canon_report_to_json(report));
        return 0;
    }
    LoadedInput input = load_input_text(read_file(path), config.eig_tol);
    SpectralPair sp = to_spectral_pair(input, config);
    CanonResult result = equi_canonicalize(sp, rule, rounds, config.sum_tol, q);
    json j = canon_result_to_json(result);
    j["flags"]["sum_zero"] = sum_zero_flags(sp, config.sum_tol);
    try {
        ColumnFlags flags = detect_uncanonicalizable(sp, config.zero_tol);
        j["flags"]["self_symmetric"] = flags.self_symmetric;
    } catch (const ResourceLimitError& e) {
        j["flags"]["warning"] = std::string("self_symmetric omitted: ") + e.what();
    }
    print_json(j);
    return 0;
}

int run_counterexample(const std::string& name, const std::string& out_dir) {
    fs::create_directories(out_dir);
    auto emit = [&](const std::string& file, const json& j) {
        std::string path = (fs::path(out_dir) / file).string();
        write_file(path, j.dump(2) + "\n");
        std::cout << path << "\n";
    };
    if (name == "epnn") {
        auto duo = gen_epnn_counterexample();
        emit("epnn_u.json", spectral_pair_to_json(duo.first));
        emit("epnn_v.json", spectral_pair_to_json(duo.second));
        return 0;
    }
    if (name == "orthonormal") {
        auto duo = gen_orthonormal_counterexample();
        emit("orthonormal_u.json", spectral_pair_to_json(duo.first));
        emit("orthonormal_v.json", spectral_pair_to_json(duo.second));
        return 0;
    }
    if (name == "oge") {
        auto oge = gen_oge_pair();
        emit("oge_l1.json", symmetric_matrix_to_json(oge.l1));
        emit("oge_l2.json", symmetric_matrix_to_json(oge.l2));
        return 0;
    }
    std::cerr << "unknown counterexample '" << name << "'; valid names: epnn, orthonormal, oge\n";
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectralwl: spectral refinement isomorphism tests, brute-force oracles, "
                 "and graph spectrum statistics"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    if (const char* env = std::getenv("SPECTRALWL_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) config.workers = w;
    }
    std::string format = "json";
    app.add_option("--eig-tol", config.eig_tol, "eigenvalue grouping tolerance");
    app.add_option("--zero-tol", config.zero_tol, "zero-entry / witness matching tolerance");
    app.add_option("--sum-tol", config.sum_tol, "canonicalization column-sum tolerance");
    app.add_option("--quantizer-scale", config.quantizer_scale, "quantization scale for hashing");
    app.add_option("--max-rounds", config.max_rounds, "refinement round cap");
    app.add_option("--seeds", config.seeds, "seeds for the randomized update rules");
    app.add_option("--workers", config.workers, "worker threads for corpus commands");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* stats_cmd = app.add_subcommand("stats", "spectral statistics over graph files");
    std::vector<std::string> stats_paths;
    bool per_graph = false, skip_errors = false;
    stats_cmd->add_option("paths", stats_paths, "graph files or directories")->required();
    stats_cmd->add_flag("--per-graph", per_graph, "include per-graph detail");
    stats_cmd->add_flag("--skip-errors", skip_errors, "skip unreadable files with a warning");

    auto* separate_cmd = app.add_subcommand("separate", "run a refinement separation test");
    std::vector<std::string> separate_files;
    std::string separate_builtin, mode = "epnn";
    separate_cmd->add_option("files", separate_files, "two input files");
    separate_cmd->add_option("--builtin", separate_builtin, "use a built-in pair");
    separate_cmd->add_option("--mode", mode, "wl1, epnn, or equi")
        ->check(CLI::IsMember({"wl1", "epnn", "equi"}));

    auto* iso_cmd = app.add_subcommand("iso", "brute-force isomorphism oracle");
    std::vector<std::string> iso_files;
    std::string iso_builtin;
    iso_cmd->add_option("files", iso_files, "two input files");
    iso_cmd->add_option("--builtin", iso_builtin, "use a built-in pair");

    auto* canon_cmd = app.add_subcommand("canonicalize", "eigenvector sign canonicalization");
    std::string canon_path;
    int canon_rounds = 2;
    canon_cmd->add_option("path", canon_path, "graph/pair file or a directory")->required();
    canon_cmd->add_option("--rounds", canon_rounds, "equivariant refinement rounds");

    auto* counter_cmd = app.add_subcommand("counterexample", "emit built-in fixtures as files");
    std::string counter_name, out_dir = ".";
    counter_cmd->add_option("name", counter_name, "epnn, orthonormal, or oge")->required();
    counter_cmd->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    config.output_format = (format == "csv") ? OutputFormat::csv : OutputFormat::json;
    try {
        config.validate();
        if (stats_cmd->parsed()) return run_stats(stats_paths, config, per_graph, skip_errors);
        if (separate_cmd->parsed()) return run_separate(separate_files, separate_builtin, mode, config);
        if (iso_cmd->parsed()) return run_iso(iso_files, iso_builtin, config);
        if (canon_cmd->parsed()) return run_canonicalize(canon_path, config, canon_rounds);
        if (counter_cmd->parsed()) return run_counterexample(counter_name, out_dir);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
