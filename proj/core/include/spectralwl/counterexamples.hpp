#pragma once

#include <array>
#include <optional>

#include "spectralwl/eigen.hpp"
#include "spectralwl/graph.hpp"

namespace spectralwl {

struct SpectralPairDuo {
    SpectralPair first;
    SpectralPair second;
};

inline constexpr std::array<double, 6> kDefaultCounterexampleLambdas = {6, 5, 4, 3, 2, 1};

// The 12-node, 6-column pair (U, V) built from {-1,1}^2 blocks. The two
// share eigenvalues, are indistinguishable by invariant-color refinement,
// and are not related by any node permutation + column sign flips. Each
// does carry a small non-trivial symmetry group (see automorphisms).
SpectralPairDuo gen_epnn_counterexample(
    std::optional<std::array<double, 6>> lambdas = std::nullopt);

// 24-node extension of the pair whose columns are exactly orthonormal,
// preserving the separation properties above.
SpectralPairDuo gen_orthonormal_counterexample(
    std::optional<std::array<double, 6>> lambdas = std::nullopt);

// Two rank-2 4x4 integer matrices assembled from fixed eigenvector columns
// (l = 1*u1 u1^T + 2*u2 u2^T) that are not permutation-conjugate.
struct OgePair {
    std::vector<double> u1;  // row-major 4x2
    std::vector<double> u2;  // row-major 4x2
    SymmetricMatrix l1;
    SymmetricMatrix l2;
};

OgePair gen_oge_pair();

}  // namespace spectralwl
