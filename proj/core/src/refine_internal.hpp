#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spectralwl/eigen.hpp"
#include "spectralwl/quantize.hpp"

// Shared color-refinement machinery for the invariant and equivariant tests.
namespace spectralwl::detail {

// Full (unhashed) quantized signature of a node's color. Colors are compared
// through dense ids assigned in signature sort order, so id equality is
// signature equality: no hash collisions can affect verdicts.
using Sig = std::vector<std::int64_t>;

std::vector<int> intern_sorted(const std::vector<Sig>& sigs);

std::vector<Sig> init_signatures(const SpectralPair& sp, const Quantizer& q);

// One refinement round over an explicit product source (the spectral pair's
// V for the invariant test, the current equivariant vectors otherwise).
std::vector<Sig> step_signatures(const std::vector<int>& colors, int n, int k,
                                 const std::vector<double>& vecs, const Quantizer& q);

int distinct_count(const std::vector<int>& colors);
bool same_multiset(std::vector<int> a, std::vector<int> b);

// Accumulates in (|x|, x)-sorted order, which makes the result a function of
// the value multiset alone and exactly negation-symmetric: permuting nodes
// or flipping a column's sign reproduces the sum bit for bit. Sorts in place.
double canonical_sum(std::vector<double>& xs);

// Shared interning across the two inputs of a synchronized run.
std::pair<std::vector<int>, std::vector<int>> intern_pair(std::vector<Sig> sa,
                                                          std::vector<Sig> sb);

}  // namespace spectralwl::detail
