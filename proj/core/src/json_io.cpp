#include "spectralwl/json_io.hpp"

#include <sstream>

#include "spectralwl/errors.hpp"
#include "spectralwl/graph_io.hpp"

namespace spectralwl {

json spectral_pair_to_json(const SpectralPair& sp) {
    json rows = json::array();
    for (int i = 0; i < sp.n; ++i) {
        json row = json::array();
        for (int c = 0; c < sp.k; ++c) row.push_back(sp.v_at(i, c));
        rows.push_back(std::move(row));
    }
    return json{{"n", sp.n}, {"k", sp.k}, {"lambdas", sp.lambdas}, {"V", std::move(rows)}};
}

SpectralPair spectral_pair_from_json(const json& j, double gap_tol) {
    for (const char* field : {"n", "k", "lambdas", "V"})
        if (!j.contains(field))
            throw ParseError(std::string("spectral pair JSON is missing \"") + field + "\"");
    int n = j["n"].get<int>();
    int k = j["k"].get<int>();
    std::vector<double> lambdas = j["lambdas"].get<std::vector<double>>();
    const auto& rows = j["V"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("\"V\" must have n rows");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n) * k);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw ParseError("\"V\" rows must have length k");
        for (const auto& x : row) v.push_back(x.get<double>());
    }
    return make_spectral_pair(n, k, std::move(lambdas), std::move(v), gap_tol);
}

json symmetric_matrix_to_json(const SymmetricMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.n(); ++c) row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"matrix", std::move(rows)}};
}

json verdict_to_json(const SeparationVerdict& v) {
    json j;
    j["outcome"] = v.outcome == Outcome::separated ? "separated" : "indistinguishable";
    if (v.round) j["round"] = *v.round;
    else j["round"] = nullptr;
    j["rounds_run"] = v.rounds_run;
    j["color_class_counts"] = v.color_class_counts;
    if (v.rule) j["rule"] = *v.rule;
    return j;
}

json witness_to_json(const SignedPermutation& g) {
    return json{{"perm", g.perm}, {"signs", g.signs}};
}

json permutation_witness_to_json(const std::vector<int>& perm) {
    return json{{"perm", perm}};
}

json canon_result_to_json(const CanonResult& r) {
    json rows = json::array();
    for (int i = 0; i < r.n; ++i) {
        json row = json::array();
        for (int c = 0; c < r.k; ++c) row.push_back(r.v_canon[static_cast<std::size_t>(i) * r.k + c]);
        rows.push_back(std::move(row));
    }
    return json{{"n", r.n},
                {"k", r.k},
                {"signs", r.signs},
                {"decidable", r.decidable},
                {"v_canon", std::move(rows)}};
}

json canon_report_to_json(const CanonReport& r) {
    json j;
    j["n_simple_eigenvectors"] = r.n_simple_eigenvectors;
    j["graphs_processed"] = r.graphs_processed;
    if (r.has_percentages) {
        j["input_sum_zero_pct"] = r.input_sum_zero_pct;
        j["output_sum_zero_pct"] = r.output_sum_zero_pct;
        if (r.n_self_symmetry_checked > 0) {
            j["input_uncanonicalizable_pct"] = r.input_uncanonicalizable_pct;
            j["output_uncanonicalizable_pct"] = r.output_uncanonicalizable_pct;
        } else {
            j["input_uncanonicalizable_pct"] = nullptr;
            j["output_uncanonicalizable_pct"] = nullptr;
        }
    } else {
        j["input_sum_zero_pct"] = nullptr;
        j["input_uncanonicalizable_pct"] = nullptr;
        j["output_sum_zero_pct"] = nullptr;
        j["output_uncanonicalizable_pct"] = nullptr;
        j["warning"] = "corpus contains no simple eigenvectors";
    }
    if (r.graphs_skipped_self_symmetry > 0) {
        j["graphs_skipped_self_symmetry"] = r.graphs_skipped_self_symmetry;
        j["warning"] = "self-symmetry skipped for graphs over the node cap";
    }
    return j;
}

json stats_to_json(const GraphSpectralStats& s) {
    return json{{"n", s.n},
                {"has_distinct", s.has_distinct},
                {"has_mult2", s.has_mult2},
                {"has_mult3", s.has_mult3},
                {"count_mult2", s.count_mult2},
                {"count_mult3", s.count_mult3},
                {"num_zeros", s.num_zeros},
                {"ratio_zeros", s.ratio_zeros},
                {"has_full_row", s.has_full_row},
                {"le_one_zero_per_vec", s.le_one_zero_per_vec},
                {"zeros_lt_vertices", s.zeros_lt_vertices},
                {"any_condition", s.any_condition}};
}

json report_to_json(const DatasetStatsReport& r, bool per_graph) {
    json j{{"graph_count", r.graph_count},
           {"pct_distinct", r.pct_distinct},
           {"pct_mult2", r.pct_mult2},
           {"pct_mult3", r.pct_mult3},
           {"avg_count_mult2", r.avg_count_mult2},
           {"avg_count_mult3", r.avg_count_mult3},
           {"avg_num_zeros", r.avg_num_zeros},
           {"avg_ratio_zeros", r.avg_ratio_zeros},
           {"pct_full_row", r.pct_full_row},
           {"pct_le_one_zero", r.pct_le_one_zero},
           {"pct_zeros_lt_vertices", r.pct_zeros_lt_vertices},
           {"pct_any_condition", r.pct_any_condition}};
    if (per_graph) {
        json arr = json::array();
        for (const auto& s : r.per_graph) arr.push_back(stats_to_json(s));
        j["per_graph"] = std::move(arr);
    }
    return j;
}

std::string report_to_csv(const DatasetStatsReport& r, bool per_graph) {
    std::ostringstream out;
    out << "statistic,value\n";
    out << "graph_count," << r.graph_count << "\n";
    out << "pct_distinct," << r.pct_distinct << "\n";
    out << "pct_mult2," << r.pct_mult2 << "\n";
    out << "pct_mult3," << r.pct_mult3 << "\n";
    out << "avg_count_mult2," << r.avg_count_mult2 << "\n";
    out << "avg_count_mult3," << r.avg_count_mult3 << "\n";
    out << "avg_ratio_zeros," << r.avg_ratio_zeros << "\n";
    out << "avg_num_zeros," << r.avg_num_zeros << "\n";
    out << "pct_full_row," << r.pct_full_row << "\n";
    out << "pct_le_one_zero," << r.pct_le_one_zero << "\n";
    out << "pct_zeros_lt_vertices," << r.pct_zeros_lt_vertices << "\n";
    out << "pct_any_condition," << r.pct_any_condition << "\n";
    if (per_graph) {
        out << "\nn,has_distinct,has_mult2,has_mult3,count_mult2,count_mult3,num_zeros,"
               "ratio_zeros,has_full_row,le_one_zero_per_vec,zeros_lt_vertices,any_condition\n";
        for (const auto& s : r.per_graph)
            out << s.n << "," << s.has_distinct << "," << s.has_mult2 << "," << s.has_mult3 << ","
                << s.count_mult2 << "," << s.count_mult3 << "," << s.num_zeros << ","
                << s.ratio_zeros << "," << s.has_full_row << "," << s.le_one_zero_per_vec << ","
                << s.zeros_lt_vertices << "," << s.any_condition << "\n";
    }
    return out.str();
}

LoadedInput load_input_text(const std::string& text, double pair_gap_tol) {
    std::string trimmed = text;
    auto b = trimmed.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && trimmed[b] == '{') {
        json j;
        try {
            j = json::parse(trimmed);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (j.contains("lambdas") && j.contains("V"))
            return spectral_pair_from_json(j, pair_gap_tol);
    }
    GraphOrMatrix gm = parse_input_text(text);
    if (std::holds_alternative<Graph>(gm)) return std::get<Graph>(std::move(gm));
    return std::get<SymmetricMatrix>(std::move(gm));
}

}  // namespace spectralwl
