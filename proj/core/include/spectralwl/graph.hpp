#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace spectralwl {

// Undirected simple graph on nodes 0..n-1. Edges are stored canonically
// (u < v, sorted, deduplicated), so equality is structural equality.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    // Validates endpoints, rejects self-loops, canonicalizes the edge set.
    static Graph create(int n, std::vector<std::pair<int, int>> edges);

    bool operator==(const Graph&) const = default;
};

// Dense symmetric matrix. Exact symmetry is enforced at construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    SymmetricMatrix(int n, std::vector<double> entries);  // row-major n*n

    int n() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& entries() const { return a_; }
    double max_abs() const;

    bool operator==(const SymmetricMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

SymmetricMatrix adjacency(const Graph& g);
SymmetricMatrix laplacian(const Graph& g);

// Node relabeling: node i of g becomes node perm[i] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

// Conjugation P*M*P^T for the permutation matrix P of perm (entry (i,j)
// of the result equals m(perm^-1(i), perm^-1(j))).
SymmetricMatrix conjugate(const SymmetricMatrix& m, std::span<const int> perm);

}  // namespace spectralwl
