#pragma once

#include <span>
#include <vector>

#include "spectralwl/graph.hpp"

namespace spectralwl {

// Spectral survey of one graph, computed from the Laplacian eigendecomposition.
// "Zero" means an eigenvector entry with magnitude <= zero_tol.
struct GraphSpectralStats {
    int n = 0;
    bool has_distinct = false;       // every eigenvalue group has multiplicity 1
    bool has_mult2 = false;          // some group has multiplicity exactly 2
    bool has_mult3 = false;          // some group has multiplicity exactly 3
    int count_mult2 = 0;             // number of multiplicity-2 groups
    int count_mult3 = 0;             // number of multiplicity-3 groups
    int num_zeros = 0;               // near-zero entries across all eigenvectors
    double ratio_zeros = 0.0;        // num_zeros / n
    bool has_full_row = false;       // some node's row has no near-zero entry
    bool le_one_zero_per_vec = false;  // every column has at most one near-zero entry
    bool zeros_lt_vertices = false;  // num_zeros < n
    bool any_condition = false;      // has_full_row || le_one_zero_per_vec || zeros_lt_vertices
};

GraphSpectralStats graph_stats(const Graph& g, double eig_tol, double zero_tol);

struct DatasetStatsReport {
    int graph_count = 0;
    double pct_distinct = 0.0;
    double pct_mult2 = 0.0;
    double pct_mult3 = 0.0;
    double avg_count_mult2 = 0.0;
    double avg_count_mult3 = 0.0;
    double avg_num_zeros = 0.0;
    double avg_ratio_zeros = 0.0;
    double pct_full_row = 0.0;
    double pct_le_one_zero = 0.0;
    double pct_zeros_lt_vertices = 0.0;
    double pct_any_condition = 0.0;
    std::vector<GraphSpectralStats> per_graph;
};

// Aggregates graph_stats over the corpus. Per-graph work fans out across
// `workers` threads; the reduction is a deterministic in-order pass.
DatasetStatsReport dataset_report(std::span<const Graph> corpus, double eig_tol,
                                  double zero_tol, int workers = 1);

}  // namespace spectralwl
