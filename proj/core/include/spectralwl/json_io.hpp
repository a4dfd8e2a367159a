#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "spectralwl/canonicalize.hpp"
#include "spectralwl/eigen.hpp"
#include "spectralwl/graph.hpp"
#include "spectralwl/oracle.hpp"
#include "spectralwl/refine.hpp"
#include "spectralwl/stats.hpp"

namespace spectralwl {

using json = nlohmann::json;

// SpectralPair wire format: {"n":…, "k":…, "lambdas":[…], "V": n rows of k}.
json spectral_pair_to_json(const SpectralPair& sp);
SpectralPair spectral_pair_from_json(const json& j, double gap_tol = 0.0);

json symmetric_matrix_to_json(const SymmetricMatrix& m);

json verdict_to_json(const SeparationVerdict& v);

// {"perm":[…], "signs":[…]} — callers emit null themselves for "no witness".
json witness_to_json(const SignedPermutation& g);
json permutation_witness_to_json(const std::vector<int>& perm);

json canon_result_to_json(const CanonResult& r);
json canon_report_to_json(const CanonReport& r);

json stats_to_json(const GraphSpectralStats& s);
json report_to_json(const DatasetStatsReport& r, bool per_graph);
std::string report_to_csv(const DatasetStatsReport& r, bool per_graph);

// Sniffs file content: JSON objects load as a graph, a symmetric matrix, or
// a spectral pair depending on their fields; other text parses as an edge list.
using LoadedInput = std::variant<Graph, SymmetricMatrix, SpectralPair>;
LoadedInput load_input_text(const std::string& text, double pair_gap_tol = 0.0);

}  // namespace spectralwl
