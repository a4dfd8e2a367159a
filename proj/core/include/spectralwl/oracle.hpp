#pragma once

#include <optional>
#include <vector>

#include "spectralwl/eigen.hpp"
#include "spectralwl/graph.hpp"

namespace spectralwl {

// Group element of {-1,+1}^K x S_n acting on spectral pairs:
// (g·sp).V[perm[i]][q] = signs[q] * sp.V[i][q], lambdas unchanged.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;  // entries in {-1,+1}
};

SpectralPair apply(const SignedPermutation& g, const SpectralPair& sp);

inline constexpr int kDefaultIsoNodeCap = 24;
inline constexpr int kDefaultMatrixIsoNodeCap = 10;

// Exhaustive backtracking search for g with ||g·a.V - b.V||_max <= tol.
// Candidate targets are pruned by per-entry magnitude compatibility and
// column signs are derived (the first matched entry above tol fixes a
// column's sign), not enumerated. Returned witnesses are re-verified.
std::optional<SignedPermutation> find_signed_isomorphism(
    const SpectralPair& a, const SpectralPair& b, double tol,
    int node_cap = kDefaultIsoNodeCap);

// True iff the only g fixing sp within tol is (identity, all +1).
bool automorphisms_trivial(const SpectralPair& sp, double tol,
                           int node_cap = kDefaultIsoNodeCap);

// First non-trivial g with g·sp == sp within tol, if any. Exposed for
// inspecting the symmetry the triviality check found.
std::optional<SignedPermutation> find_nontrivial_automorphism(
    const SpectralPair& sp, double tol, int node_cap = kDefaultIsoNodeCap);

// Exhaustive-with-pruning search over S_n for ||P m1 P^T - m2||_max <= tol.
std::optional<std::vector<int>> perm_isomorphic_matrices(
    const SymmetricMatrix& m1, const SymmetricMatrix& m2, double tol,
    int node_cap = kDefaultMatrixIsoNodeCap);

}  // namespace spectralwl
