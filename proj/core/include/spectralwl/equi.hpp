#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spectralwl/eigen.hpp"
#include "spectralwl/quantize.hpp"
#include "spectralwl/refine.hpp"

namespace spectralwl {

// Sign-equivariant refinement state: invariant colors plus per-node K-vectors.
struct EquiState {
    int round = 0;
    std::vector<int> colors;
    std::vector<double> vecs;  // row-major n*k, row i = v_i^(round)
    std::vector<std::vector<int>> color_history;
};

// The equivariant update component. All rules are functions of quantized
// sign-invariant values (v_i⊙v_i, v_j⊙v_j, v_i⊙v_j) and the round index,
// which keeps the whole procedure sign-equivariant by construction.
struct UpdateRule {
    enum class Kind { zero, proof_rule, random_table };

    Kind kind = Kind::zero;
    std::uint64_t seed = 0;

    static UpdateRule zero() { return {Kind::zero, 0}; }
    static UpdateRule proof_rule() { return {Kind::proof_rule, 0}; }
    static UpdateRule random_table(std::uint64_t seed) { return {Kind::random_table, seed}; }

    std::string name() const;
};

// colors = epnn_init colors; vecs = V.
EquiState equi_init(const SpectralPair& sp, const Quantizer& q);

// Colors refine as in epnn_step but with products taken from the current
// vecs; vecs update as v_i += sum_j v_j ⊙ rule(...). Both use round-t values.
EquiState equi_step(const EquiState& state, const SpectralPair& sp,
                    const UpdateRule& rule, const Quantizer& q);

// Runs each rule as an independent synchronized pair refinement; separated if
// any rule yields differing color multisets within max_rounds.
SeparationVerdict equi_distinguish(const SpectralPair& a, const SpectralPair& b,
                                   std::span<const UpdateRule> rules, int max_rounds,
                                   const Quantizer& q);

}  // namespace spectralwl
