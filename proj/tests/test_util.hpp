#pragma once

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "spectralwl/eigen.hpp"
#include "spectralwl/graph.hpp"
#include "spectralwl/oracle.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline spectralwl::SymmetricMatrix random_symmetric(int n, Rng& rng) {
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double x = uniform(rng, -1.0, 1.0);
            a[static_cast<std::size_t>(i) * n + j] = x;
            a[static_cast<std::size_t>(j) * n + i] = x;
        }
    return spectralwl::SymmetricMatrix(n, std::move(a));
}

// Dense pair in the simple-spectrum domain: eigenvalue gaps of at least ~1,
// entries uniform in [-1,1]. zero_entries plants exact zeros (callers keep
// it below n so a zero-free anchor row still exists).
inline spectralwl::SpectralPair random_spectral_pair(int n, int k, Rng& rng,
                                                     int zero_entries = 0) {
    if (k > n) k = n;
    std::vector<double> lambdas(k);
    double top = uniform(rng, 5.0, 10.0) + k;
    for (int q = 0; q < k; ++q) top = lambdas[q] = top - uniform(rng, 1.0, 2.0);
    std::vector<double> v(static_cast<std::size_t>(n) * k);
    for (auto& x : v) {
        x = uniform(rng, -1.0, 1.0);
        if (std::abs(x) < 0.05) x = x < 0 ? x - 0.05 : x + 0.05;  // keep entries away from 0
    }
    for (int z = 0; z < zero_entries; ++z)
        v[static_cast<std::size_t>(uniform_int(rng, 0, n * k - 1))] = 0.0;
    return spectralwl::make_spectral_pair(n, k, std::move(lambdas), std::move(v));
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline spectralwl::SignedPermutation random_signed_permutation(int n, int k, Rng& rng) {
    spectralwl::SignedPermutation g;
    g.perm = random_permutation(n, rng);
    g.signs.resize(k);
    for (int& s : g.signs) s = uniform_int(rng, 0, 1) ? 1 : -1;
    return g;
}

inline spectralwl::Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform(rng, 0.0, 1.0) < p) edges.emplace_back(i, j);
    return spectralwl::Graph::create(n, std::move(edges));
}

inline spectralwl::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return spectralwl::Graph::create(n, std::move(edges));
}

inline spectralwl::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return spectralwl::Graph::create(n, std::move(edges));
}

inline spectralwl::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return spectralwl::Graph::create(n, std::move(edges));
}

inline spectralwl::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return spectralwl::Graph::create(leaves + 1, std::move(edges));
}

inline spectralwl::Graph disjoint_union(const spectralwl::Graph& a, const spectralwl::Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges;
    for (auto [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
    return spectralwl::Graph::create(a.n + b.n, std::move(edges));
}

}  // namespace testutil
