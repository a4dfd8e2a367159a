#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectralwl/eigen.hpp"
#include "spectralwl/graph.hpp"
#include "spectralwl/quantize.hpp"

namespace spectralwl {

// Per-node colors across refinement rounds. Color ids are canonical within a
// run: per round, distinct quantized signatures get dense ids in signature
// sort order, so two runs over inputs with equal signature sets produce
// identical ids. Cross-input comparisons use the synchronized pair drivers,
// which intern both inputs through one table.
struct ColorState {
    int round = 0;
    std::vector<int> colors;
    std::vector<std::vector<int>> history;  // history[t] = colors at round t

    int class_count() const;
};

enum class Outcome { separated, indistinguishable };

struct SeparationVerdict {
    Outcome outcome = Outcome::indistinguishable;
    std::optional<int> round;  // first round with differing readouts (when separated)
    int rounds_run = 0;
    std::vector<int> color_class_counts;  // distinct colors across both inputs, per round
    std::optional<std::string> rule;      // set by the equivariant driver
};

using GlobalColor = std::uint64_t;

// Round-0 coloring: node i gets the class of (quantized lambdas, quantized V_i ⊙ V_i).
ColorState epnn_init(const SpectralPair& sp, const Quantizer& q);

// One refinement round: node i's new color is the class of
// (old color of i, sorted multiset over all j of (old color of j, quantized V_i ⊙ V_j)).
ColorState epnn_step(const ColorState& state, const SpectralPair& sp, const Quantizer& q);

// Permutation-invariant hash of the color multiset.
GlobalColor epnn_readout(const ColorState& state);

// Synchronized refinement of both inputs with shared color tables. Separated
// at the first round whose color multisets differ; indistinguishable once
// both partitions are stable or max_rounds is reached.
SeparationVerdict epnn_distinguish(const SpectralPair& a, const SpectralPair& b,
                                   int max_rounds, const Quantizer& q);

struct ReconstructionResult {
    int anchor_row = 0;
    std::vector<double> v_recovered;  // row-major n*k, anchor row strictly positive
};

// Sign-canonicalizes V off a zero-free anchor row (the first row whose
// entries all exceed zero_tol in magnitude). FailedPreconditionError when no
// such row exists.
ReconstructionResult reconstruct_from_purview(const SpectralPair& sp, double zero_tol);

struct NodeIdResult {
    bool unique = false;
    std::vector<int> ids;
};

// Colors after exactly one refinement round; unique iff pairwise distinct.
NodeIdResult unique_node_ids(const SpectralPair& sp, const Quantizer& q);

// Classical 1-WL color refinement on adjacency, as a baseline. Uniform
// initial colors, neighbor-multiset updates.
SeparationVerdict wl1_distinguish(const Graph& a, const Graph& b, int max_rounds);

}  // namespace spectralwl
