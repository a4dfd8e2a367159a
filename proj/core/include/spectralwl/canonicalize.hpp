#pragma once

#include <span>
#include <vector>

#include "spectralwl/equi.hpp"
#include "spectralwl/graph.hpp"
#include "spectralwl/oracle.hpp"

namespace spectralwl {

// Sign choice per eigenvector column. signs[q] == 0 marks a column whose
// equivariant output sum fell inside sum_tol of zero (undecidable); such
// columns pass through unchanged and are flagged rather than erroring.
struct CanonResult {
    int n = 0;
    int k = 0;
    std::vector<int> signs;       // in {-1, 0, +1}
    std::vector<bool> decidable;  // decidable[q] == (signs[q] != 0)
    std::vector<double> v_canon;  // row-major n*k
};

// Runs the equivariant refinement for `rounds` rounds, reads each column's
// sign from the column sum of the equivariant output, and applies the signs
// to the original eigenvectors.
CanonResult equi_canonicalize(const SpectralPair& sp, const UpdateRule& rule, int rounds,
                              double sum_tol, const Quantizer& q = Quantizer{});

// |sum of column q| <= tol, per column.
std::vector<bool> sum_zero_flags(const SpectralPair& sp, double tol);

// Whether some permutation maps the column to its negation (the values can
// be matched up as x ↔ -x within tol). Such columns admit no
// permutation-equivariant sign choice.
bool column_self_symmetric(std::span<const double> column, double tol);

struct ColumnFlags {
    std::vector<bool> sum_zero;
    std::vector<bool> self_symmetric;
};

// Both per-column flags. ResourceLimitError when n exceeds node_cap (the
// self-symmetry decision is capped alongside the isomorphism searches).
ColumnFlags detect_uncanonicalizable(const SpectralPair& sp, double tol,
                                     int node_cap = kDefaultIsoNodeCap);

struct CanonReport {
    int n_simple_eigenvectors = 0;        // columns in multiplicity-1 groups, corpus-wide
    int n_self_symmetry_checked = 0;      // columns on graphs within the node cap
    int graphs_processed = 0;
    int graphs_skipped_self_symmetry = 0; // graphs over the node cap
    bool has_percentages = false;         // false when no simple eigenvectors exist
    double input_sum_zero_pct = 0.0;
    double input_uncanonicalizable_pct = 0.0;
    double output_sum_zero_pct = 0.0;
    double output_uncanonicalizable_pct = 0.0;
};

struct CanonReportOptions {
    double eig_tol = 1e-4;
    double sum_tol = 1e-7;
    double match_tol = 1e-6;  // value-matching tolerance for self-symmetry
    int node_cap = kDefaultIsoNodeCap;
    int workers = 1;
};

// Per graph: eigendecompose the Laplacian, keep the multiplicity-1 columns,
// and aggregate the four sum-zero / self-symmetry percentages for the raw
// eigenvectors and for the equivariant outputs.
CanonReport canonicalization_report(std::span<const Graph> corpus, const UpdateRule& rule,
                                    int rounds, const CanonReportOptions& options,
                                    const Quantizer& q = Quantizer{});

}  // namespace spectralwl
