#include <doctest.h>

#include <cmath>

#include "spectralwl/counterexamples.hpp"
#include "spectralwl/equi.hpp"
#include "spectralwl/errors.hpp"
#include "test_util.hpp"

using namespace spectralwl;

namespace {
const Quantizer kQ;
const std::vector<UpdateRule> kProofOnly = {UpdateRule::proof_rule()};
const std::vector<UpdateRule> kZeroOnly = {UpdateRule::zero()};
}  // namespace

TEST_CASE("equi_init matches the invariant initialization") {
    testutil::Rng rng(61);
    SpectralPair sp = testutil::random_spectral_pair(6, 3, rng);
    EquiState s = equi_init(sp, kQ);
    CHECK(s.vecs == sp.v);
    CHECK(s.colors == epnn_init(sp, kQ).colors);
    auto duo = gen_epnn_counterexample();
    CHECK(equi_init(duo.first, kQ).colors == epnn_init(duo.first, kQ).colors);
}

TEST_CASE("zero rule reduces to the invariant refinement") {
    testutil::Rng rng(67);
    for (int it = 0; it < 20; ++it) {
        int n = testutil::uniform_int(rng, 3, 8);
        SpectralPair sp = testutil::random_spectral_pair(n, 2, rng, testutil::uniform_int(rng, 0, 2));
        EquiState es = equi_init(sp, kQ);
        ColorState cs = epnn_init(sp, kQ);
        for (int t = 0; t < 3; ++t) {
            es = equi_step(es, sp, UpdateRule::zero(), kQ);
            cs = epnn_step(cs, sp, kQ);
            CHECK(es.colors == cs.colors);
            CHECK(es.vecs == sp.v);
        }
    }
}

TEST_CASE("zero-rule driver agrees with the invariant driver") {
    for (auto duo : {gen_epnn_counterexample(), gen_orthonormal_counterexample()}) {
        SeparationVerdict equi = equi_distinguish(duo.first, duo.second, kZeroOnly, 20, kQ);
        SeparationVerdict epnn = epnn_distinguish(duo.first, duo.second, 20, kQ);
        CHECK(equi.outcome == epnn.outcome);
    }

    testutil::Rng rng(71);
    for (int it = 0; it < 100; ++it) {
        int n = testutil::uniform_int(rng, 3, 7);
        SpectralPair a = testutil::random_spectral_pair(n, 2, rng);
        SpectralPair b = testutil::uniform_int(rng, 0, 1)
                             ? apply(testutil::random_signed_permutation(n, 2, rng), a)
                             : testutil::random_spectral_pair(n, 2, rng);
        SeparationVerdict ve = equi_distinguish(a, b, kZeroOnly, 20, kQ);
        SeparationVerdict vp = epnn_distinguish(a, b, 20, kQ);
        CHECK(ve.outcome == vp.outcome);
        if (vp.outcome == Outcome::separated) CHECK(ve.round == vp.round);
    }
}

TEST_CASE("proof rule fills the first middle-block node's vector") {
    auto duo = gen_epnn_counterexample();
    EquiState s = equi_step(equi_init(duo.first, kQ), duo.first, UpdateRule::proof_rule(), kQ);
    // node 4 (first node of the middle block) had zeros in its first two
    // coordinates; after one round they are filled in
    for (int c = 0; c < 6; ++c) CHECK(std::abs(s.vecs[4 * 6 + c]) > 0.5);
    // the zero rule leaves them in place
    EquiState z = equi_step(equi_init(duo.first, kQ), duo.first, UpdateRule::zero(), kQ);
    CHECK(z.vecs[4 * 6 + 0] == 0.0);
}

TEST_CASE("strictly-stronger witness on the block counterexample") {
    auto duo = gen_epnn_counterexample();
    SeparationVerdict with_proof = equi_distinguish(duo.first, duo.second, kProofOnly, 2, kQ);
    CHECK(with_proof.outcome == Outcome::separated);
    CHECK(with_proof.round == 2);
    CHECK(with_proof.rule == "proof_rule");

    SeparationVerdict with_zero = equi_distinguish(duo.first, duo.second, kZeroOnly, 20, kQ);
    CHECK(with_zero.outcome == Outcome::indistinguishable);
}

TEST_CASE("equivariance of vectors and invariance of colors") {
    testutil::Rng rng(73);
    std::vector<UpdateRule> rules = {UpdateRule::zero(), UpdateRule::proof_rule(),
                                     UpdateRule::random_table(1), UpdateRule::random_table(9)};
    for (int it = 0; it < 20; ++it) {
        int n = testutil::uniform_int(rng, 3, 7);
        int k = testutil::uniform_int(rng, 2, 4);
        SpectralPair sp = testutil::random_spectral_pair(n, k, rng);
        auto g = testutil::random_signed_permutation(n, sp.k, rng);
        k = sp.k;
        SpectralPair gsp = apply(g, sp);
        const UpdateRule& rule = rules[static_cast<std::size_t>(it) % rules.size()];
        EquiState sa = equi_init(sp, kQ);
        EquiState sb = equi_init(gsp, kQ);
        for (int t = 0; t < 3; ++t) {
            sa = equi_step(sa, sp, rule, kQ);
            sb = equi_step(sb, gsp, rule, kQ);
            for (int i = 0; i < n; ++i) {
                CHECK(sb.colors[g.perm[i]] == sa.colors[i]);
                for (int c = 0; c < k; ++c) {
                    // bit-exact: updates accumulate in canonical order
                    double expected = sa.vecs[static_cast<std::size_t>(i) * k + c] * g.signs[c];
                    double actual = sb.vecs[static_cast<std::size_t>(g.perm[i]) * k + c];
                    CHECK(expected == actual);
                }
            }
        }
    }
}

TEST_CASE("random_table is deterministic and seed-sensitive") {
    testutil::Rng rng(79);
    SpectralPair sp = testutil::random_spectral_pair(6, 3, rng);
    EquiState a1 = equi_step(equi_init(sp, kQ), sp, UpdateRule::random_table(5), kQ);
    EquiState a2 = equi_step(equi_init(sp, kQ), sp, UpdateRule::random_table(5), kQ);
    EquiState b = equi_step(equi_init(sp, kQ), sp, UpdateRule::random_table(6), kQ);
    CHECK(a1.vecs == a2.vecs);
    CHECK(a1.vecs != b.vecs);
    for (double x : a1.vecs) CHECK(std::isfinite(x));
}

TEST_CASE("planted pairs stay indistinguishable under every rule") {
    testutil::Rng rng(83);
    std::vector<UpdateRule> rules = {UpdateRule::proof_rule(), UpdateRule::random_table(1),
                                     UpdateRule::random_table(2)};
    for (int it = 0; it < 10; ++it) {
        int n = testutil::uniform_int(rng, 4, 8);
        int k = testutil::uniform_int(rng, 2, 3);
        SpectralPair sp = testutil::random_spectral_pair(n, k, rng);
        k = sp.k;
        SpectralPair gsp = apply(testutil::random_signed_permutation(n, k, rng), sp);
        SeparationVerdict v = equi_distinguish(sp, gsp, rules, 4, kQ);
        CHECK(v.outcome == Outcome::indistinguishable);
    }
}

TEST_CASE("argument validation") {
    testutil::Rng rng(89);
    SpectralPair sp = testutil::random_spectral_pair(4, 2, rng);
    CHECK_THROWS_AS(equi_distinguish(sp, sp, std::vector<UpdateRule>{}, 5, kQ), DomainError);
    CHECK_THROWS_AS(equi_distinguish(sp, sp, kZeroOnly, 0, kQ), DomainError);
    EquiState s = equi_init(sp, kQ);
    SpectralPair other = testutil::random_spectral_pair(5, 2, rng);
    CHECK_THROWS_AS(equi_step(s, other, UpdateRule::zero(), kQ), DomainError);
}
