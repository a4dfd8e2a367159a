#include "spectralwl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectralwl/errors.hpp"

namespace spectralwl {

Graph Graph::create(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw DomainError("node count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw DomainError("negative node index " + std::to_string(std::min(u, v)));
        if (u >= n || v >= n)
            throw DomainError("node index " + std::to_string(std::max(u, v)) +
                              " out of range for n=" + std::to_string(n));
        if (u == v) throw DomainError("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

SymmetricMatrix::SymmetricMatrix(int n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
        throw DomainError("matrix entries do not form an n*n array");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (a_[static_cast<std::size_t>(i) * n_ + j] != a_[static_cast<std::size_t>(j) * n_ + i])
                throw DomainError("matrix is not exactly symmetric at (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

SymmetricMatrix adjacency(const Graph& g) {
    std::vector<double> a(static_cast<std::size_t>(g.n) * g.n, 0.0);
    for (auto [u, v] : g.edges) {
        a[static_cast<std::size_t>(u) * g.n + v] = 1.0;
        a[static_cast<std::size_t>(v) * g.n + u] = 1.0;
    }
    return SymmetricMatrix(g.n, std::move(a));
}

SymmetricMatrix laplacian(const Graph& g) {
    std::vector<double> a(static_cast<std::size_t>(g.n) * g.n, 0.0);
    for (auto [u, v] : g.edges) {
        a[static_cast<std::size_t>(u) * g.n + v] = -1.0;
        a[static_cast<std::size_t>(v) * g.n + u] = -1.0;
        a[static_cast<std::size_t>(u) * g.n + u] += 1.0;
        a[static_cast<std::size_t>(v) * g.n + v] += 1.0;
    }
    return SymmetricMatrix(g.n, std::move(a));
}

namespace {

void check_permutation(std::span<const int> perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw DomainError("not a permutation of [0,n)");
        seen[p] = true;
    }
}

}  // namespace

Graph relabel(const Graph& g, std::span<const int> perm) {
    check_permutation(perm, g.n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return Graph::create(g.n, std::move(edges));
}

SymmetricMatrix conjugate(const SymmetricMatrix& m, std::span<const int> perm) {
    check_permutation(perm, m.n());
    int n = m.n();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(perm[i]) * n + perm[j]] = m(i, j);
    return SymmetricMatrix(n, std::move(a));
}

}  // namespace spectralwl
