#include "spectralwl/equi.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "refine_internal.hpp"
#include "spectralwl/errors.hpp"

namespace spectralwl {

using detail::distinct_count;
using detail::init_signatures;
using detail::intern_pair;
using detail::intern_sorted;
using detail::same_multiset;
using detail::step_signatures;

std::string UpdateRule::name() const {
    switch (kind) {
        case Kind::zero: return "zero";
        case Kind::proof_rule: return "proof_rule";
        case Kind::random_table: return "random_table(" + std::to_string(seed) + ")";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic map from the quantized invariant triple to [-1,1]^K.
void random_table_output(std::uint64_t seed, std::span<const std::int64_t> qi,
                         std::span<const std::int64_t> qj, std::span<const std::int64_t> qprod,
                         std::vector<double>& out) {
    std::uint64_t h = splitmix64(seed ^ 0x5ee12ul);
    for (std::int64_t x : qi) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
    for (std::int64_t x : qj) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
    for (std::int64_t x : qprod) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
    for (double& v : out) {
        h = splitmix64(h);
        v = static_cast<double>(h >> 11) * (2.0 / 9007199254740992.0) - 1.0;
    }
}

struct ProofTrigger {
    std::array<std::int64_t, 6> hi, hj, prod;
};

ProofTrigger proof_trigger(const Quantizer& q) {
    const std::int64_t one = q.quantize(1.0);
    return {{0, 0, one, one, one, one}, {one, one, one, one, 0, 0}, {0, 0, one, one, 0, 0}};
}

bool matches(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Evaluates the rule on quantized invariant arguments. `round` is the round
// the inputs come from (the proof rule fires on the round-0 -> round-1 step
// only).
void rule_output(const UpdateRule& rule, const Quantizer& q, int round,
                 std::span<const std::int64_t> qi, std::span<const std::int64_t> qj,
                 std::span<const std::int64_t> qprod, std::vector<double>& out) {
    switch (rule.kind) {
        case UpdateRule::Kind::zero:
            std::fill(out.begin(), out.end(), 0.0);
            return;
        case UpdateRule::Kind::proof_rule: {
            std::fill(out.begin(), out.end(), 0.0);
            if (round != 0 || out.size() != 6) return;
            ProofTrigger trig = proof_trigger(q);
            if (matches(qi, trig.hi) && matches(qj, trig.hj) && matches(qprod, trig.prod)) {
                out[0] = 1.0;
                out[1] = 1.0;
            }
            return;
        }
        case UpdateRule::Kind::random_table:
            random_table_output(rule.seed, qi, qj, qprod, out);
            return;
    }
}

std::vector<double> updated_vecs(const std::vector<double>& vecs, int n, int k, int round,
                                 const UpdateRule& rule, const Quantizer& q) {
    if (rule.kind == UpdateRule::Kind::zero) return vecs;
    auto at = [&](int i, int c) { return vecs[static_cast<std::size_t>(i) * k + c]; };
    std::vector<std::vector<std::int64_t>> qsq(n);
    for (int i = 0; i < n; ++i) {
        qsq[i].resize(k);
        for (int c = 0; c < k; ++c) qsq[i][c] = q.quantize(at(i, c) * at(i, c));
    }
    std::vector<double> next = vecs;
    std::vector<std::int64_t> qprod(k);
    std::vector<double> out(k);
    // terms[c] collects the j-contributions for coordinate c; summing them in
    // canonical order keeps the update bit-exact under node permutations and
    // column sign flips
    std::vector<std::vector<double>> terms(k);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < k; ++c) terms[c].clear();
        for (int j = 0; j < n; ++j) {
            for (int c = 0; c < k; ++c) qprod[c] = q.quantize(at(i, c) * at(j, c));
            rule_output(rule, q, round, qsq[i], qsq[j], qprod, out);
            for (int c = 0; c < k; ++c) terms[c].push_back(at(j, c) * out[c]);
        }
        for (int c = 0; c < k; ++c)
            next[static_cast<std::size_t>(i) * k + c] = at(i, c) + detail::canonical_sum(terms[c]);
    }
    return next;
}

}  // namespace

EquiState equi_init(const SpectralPair& sp, const Quantizer& q) {
    EquiState state;
    state.round = 0;
    state.colors = intern_sorted(init_signatures(sp, q));
    state.vecs = sp.v;
    state.color_history = {state.colors};
    return state;
}

EquiState equi_step(const EquiState& state, const SpectralPair& sp, const UpdateRule& rule,
                    const Quantizer& q) {
    if (static_cast<int>(state.colors.size()) != sp.n ||
        state.vecs.size() != static_cast<std::size_t>(sp.n) * sp.k)
        throw DomainError("equivariant state does not match the spectral pair's dimensions");
    EquiState next;
    next.round = state.round + 1;
    next.colors = intern_sorted(step_signatures(state.colors, sp.n, sp.k, state.vecs, q));
    next.vecs = updated_vecs(state.vecs, sp.n, sp.k, state.round, rule, q);
    next.color_history = state.color_history;
    next.color_history.push_back(next.colors);
    return next;
}

SeparationVerdict equi_distinguish(const SpectralPair& a, const SpectralPair& b,
                                   std::span<const UpdateRule> rules, int max_rounds,
                                   const Quantizer& q) {
    if (rules.empty()) throw DomainError("rule list must be non-empty");
    if (max_rounds <= 0) throw DomainError("max_rounds must be positive");
    if (a.k != b.k) throw DomainError("spectral pairs have different K");

    SeparationVerdict longest;
    for (const UpdateRule& rule : rules) {
        SeparationVerdict verdict;
        auto [ca, cb] = intern_pair(init_signatures(a, q), init_signatures(b, q));
        std::vector<double> va = a.v, vb = b.v;
        std::vector<int> joint = ca;
        joint.insert(joint.end(), cb.begin(), cb.end());
        verdict.color_class_counts.push_back(distinct_count(joint));
        if (!same_multiset(ca, cb)) {
            verdict.outcome = Outcome::separated;
            verdict.round = 0;
            verdict.rule = rule.name();
            return verdict;
        }
        int prev_a = distinct_count(ca);
        int prev_b = distinct_count(cb);
        for (int t = 1; t <= max_rounds; ++t) {
            auto [na, nb] = intern_pair(step_signatures(ca, a.n, a.k, va, q),
                                        step_signatures(cb, b.n, b.k, vb, q));
            std::vector<double> nva = updated_vecs(va, a.n, a.k, t - 1, rule, q);
            std::vector<double> nvb = updated_vecs(vb, b.n, b.k, t - 1, rule, q);
            bool vecs_fixed = (nva == va) && (nvb == vb);
            ca = std::move(na);
            cb = std::move(nb);
            va = std::move(nva);
            vb = std::move(nvb);
            joint = ca;
            joint.insert(joint.end(), cb.begin(), cb.end());
            verdict.color_class_counts.push_back(distinct_count(joint));
            verdict.rounds_run = t;
            if (!same_multiset(ca, cb)) {
                verdict.outcome = Outcome::separated;
                verdict.round = t;
                verdict.rule = rule.name();
                return verdict;
            }
            int cur_a = distinct_count(ca);
            int cur_b = distinct_count(cb);
            if (cur_a == prev_a && cur_b == prev_b && vecs_fixed) break;  // full fixed point
            prev_a = cur_a;
            prev_b = cur_b;
        }
        verdict.outcome = Outcome::indistinguishable;
        if (verdict.rounds_run >= longest.rounds_run) longest = verdict;
    }
    return longest;
}

}  // namespace spectralwl
