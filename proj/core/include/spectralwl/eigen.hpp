#pragma once

#include <span>
#include <vector>

#include "spectralwl/graph.hpp"

namespace spectralwl {

// Full eigendecomposition of a symmetric matrix. Columns of V are unit
// eigenvectors; lambdas is sorted non-increasing (ties keep the solver's
// original column order).
struct EigenDecomposition {
    int n = 0;
    std::vector<double> lambdas;
    std::vector<double> v;  // row-major n*n, column q pairs with lambdas[q]

    double v_at(int i, int q) const { return v[static_cast<std::size_t>(i) * n + q]; }
};

// K retained eigenvector columns with strictly decreasing eigenvalues.
struct SpectralPair {
    int n = 0;
    int k = 0;
    std::vector<double> lambdas;
    std::vector<double> v;  // row-major n*k

    double v_at(int i, int q) const { return v[static_cast<std::size_t>(i) * k + q]; }
    std::span<const double> row(int i) const {
        return {v.data() + static_cast<std::size_t>(i) * k, static_cast<std::size_t>(k)};
    }
};

// Validates dimensions and the strict-decrease invariant
// (lambdas[q] - lambdas[q+1] > gap_tol for all q).
SpectralPair make_spectral_pair(int n, int k, std::vector<double> lambdas,
                                std::vector<double> v, double gap_tol = 0.0);

struct EigenvalueGroup {
    double representative = 0.0;  // first (largest) eigenvalue of the group
    int multiplicity = 0;
    std::vector<int> column_indices;
};

// Cyclic Jacobi on the dense matrix. Deterministic for a fixed input.
// Throws NumericalError if the off-diagonal norm is not driven below
// 1e-12 * (1 + ||A||_F) within 100 sweeps.
EigenDecomposition eigendecompose(const SymmetricMatrix& m);

// Greedy left-to-right grouping: a new group starts when the gap to the
// previous eigenvalue exceeds eig_tol. Input must be sorted non-increasing
// (within eig_tol slack).
std::vector<EigenvalueGroup> group_eigenvalues(std::span<const double> lambdas, double eig_tol);

bool is_simple_spectrum(const EigenDecomposition& ed, double eig_tol);

enum class TruncateOrder { largest, smallest_nonzero };

// Selects k eigenvector columns: the k largest eigenvalues, or the k
// smallest ones with |lambda| > eig_tol. The selected eigenvalues must be
// pairwise separated by more than eig_tol (NotSimpleError otherwise).
SpectralPair truncate(const EigenDecomposition& ed, int k, double eig_tol,
                      TruncateOrder order = TruncateOrder::largest);

}  // namespace spectralwl
