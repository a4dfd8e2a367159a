#include <doctest.h>

#include <cmath>

#include "spectralwl/eigen.hpp"
#include "spectralwl/errors.hpp"
#include "test_util.hpp"

using namespace spectralwl;

namespace {

void check_decomposition_invariants(const SymmetricMatrix& m, const EigenDecomposition& ed) {
    const int n = m.n();
    for (int c = 0; c < n; ++c) {
        double norm2 = 0;
        for (int i = 0; i < n; ++i) norm2 += ed.v_at(i, c) * ed.v_at(i, c);
        CHECK(std::abs(std::sqrt(norm2) - 1.0) <= 1e-9);
    }
    for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
            double dot = 0;
            for (int i = 0; i < n; ++i) dot += ed.v_at(i, c) * ed.v_at(i, d);
            CHECK(std::abs(dot) <= 1e-8);
        }
    double bound = 1e-7 * (1.0 + m.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double rec = 0;
            for (int c = 0; c < n; ++c) rec += ed.v_at(i, c) * ed.lambdas[c] * ed.v_at(j, c);
            CHECK(std::abs(rec - m(i, j)) <= bound);
        }
    for (int c = 0; c + 1 < n; ++c) CHECK(ed.lambdas[c] >= ed.lambdas[c + 1] - 1e-12);
}

}  // namespace

TEST_CASE("2x2 closed form") {
    SymmetricMatrix m(2, {1, -1, -1, 1});
    EigenDecomposition ed = eigendecompose(m);
    CHECK(ed.lambdas[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ed.lambdas[1] == doctest::Approx(0.0).epsilon(1e-12));
    double s = 1.0 / std::sqrt(2.0);
    // column 0 is (1,-1)/sqrt(2) up to sign, column 1 is (1,1)/sqrt(2) up to sign
    CHECK(std::abs(std::abs(ed.v_at(0, 0)) - s) < 1e-12);
    CHECK(ed.v_at(0, 0) * ed.v_at(1, 0) < 0);
    CHECK(ed.v_at(0, 1) * ed.v_at(1, 1) > 0);
}

TEST_CASE("identity has multiplicity n") {
    SymmetricMatrix m(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    EigenDecomposition ed = eigendecompose(m);
    for (double l : ed.lambdas) CHECK(l == doctest::Approx(1.0));
    auto groups = group_eigenvalues(ed.lambdas, 1e-4);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].multiplicity == 3);
    CHECK_FALSE(is_simple_spectrum(ed, 1e-4));
}

TEST_CASE("diagonal matrix") {
    SymmetricMatrix m(3, {5, 0, 0, 0, 2, 0, 0, 0, -1});
    EigenDecomposition ed = eigendecompose(m);
    CHECK(ed.lambdas == std::vector<double>{5, 2, -1});
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(ed.v_at(i, c)) == doctest::Approx(i == c ? 1.0 : 0.0));
}

TEST_CASE("path-3 laplacian spectrum is 3,1,0") {
    EigenDecomposition ed = eigendecompose(laplacian(testutil::path_graph(3)));
    CHECK(ed.lambdas[0] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(ed.lambdas[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ed.lambdas[2]) < 1e-10);
    CHECK(is_simple_spectrum(ed, 1e-4));
}

TEST_CASE("k4 laplacian groups as multiplicity 3 plus zero") {
    EigenDecomposition ed = eigendecompose(laplacian(testutil::complete_graph(4)));
    auto groups = group_eigenvalues(ed.lambdas, 1e-4);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].multiplicity == 3);
    CHECK(groups[0].representative == doctest::Approx(4.0));
    CHECK(groups[1].multiplicity == 1);
    CHECK_FALSE(is_simple_spectrum(ed, 1e-4));
}

TEST_CASE("group_eigenvalues examples") {
    std::vector<double> lam = {2.0, 2.00005, 0.0};  // sorted within tolerance slack
    auto groups = group_eigenvalues(lam, 1e-4);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].multiplicity == 2);
    CHECK(groups[0].representative == 2.0);
    CHECK(groups[1].multiplicity == 1);

    auto singletons = group_eigenvalues(std::vector<double>{3, 2, 1}, 1e-4);
    CHECK(singletons.size() == 3);

    CHECK_THROWS_AS(group_eigenvalues(std::vector<double>{1.0, 2.0}, 1e-4), DomainError);

    SUBCASE("multiplicities sum to n") {
        testutil::Rng rng(5);
        for (int it = 0; it < 20; ++it) {
            int n = testutil::uniform_int(rng, 1, 10);
            auto ed = eigendecompose(testutil::random_symmetric(n, rng));
            int total = 0;
            for (const auto& g : group_eigenvalues(ed.lambdas, 1e-4)) total += g.multiplicity;
            CHECK(total == n);
        }
    }
}

TEST_CASE("truncate") {
    SymmetricMatrix m(3, {5, 0, 0, 0, 2, 0, 0, 0, -1});
    EigenDecomposition ed = eigendecompose(m);
    SUBCASE("largest") {
        SpectralPair sp = truncate(ed, 2, 1e-4, TruncateOrder::largest);
        CHECK(sp.lambdas == std::vector<double>{5, 2});
        CHECK(std::abs(sp.v_at(0, 0)) == doctest::Approx(1.0));
        CHECK(std::abs(sp.v_at(1, 1)) == doctest::Approx(1.0));
    }
    SUBCASE("smallest_nonzero skips near-zero eigenvalues") {
        EigenDecomposition pd = eigendecompose(laplacian(testutil::path_graph(3)));
        SpectralPair sp = truncate(pd, 2, 1e-4, TruncateOrder::smallest_nonzero);
        CHECK(sp.lambdas[0] == doctest::Approx(3.0));
        CHECK(sp.lambdas[1] == doctest::Approx(1.0));
        CHECK_THROWS_AS(truncate(pd, 3, 1e-4, TruncateOrder::smallest_nonzero), DomainError);
    }
    SUBCASE("repeated eigenvalues in the selection fail") {
        EigenDecomposition kd = eigendecompose(laplacian(testutil::complete_graph(4)));
        try {
            truncate(kd, 2, 1e-4, TruncateOrder::largest);
            FAIL("expected NotSimpleError");
        } catch (const NotSimpleError& e) {
            CHECK(e.colliding_indices() == std::vector<int>{0, 1});
        }
    }
    SUBCASE("full path-3 decomposition as a pair") {
        EigenDecomposition pd = eigendecompose(laplacian(testutil::path_graph(3)));
        SpectralPair sp = truncate(pd, 3, 1e-4);
        CHECK(sp.k == 3);
    }
}

TEST_CASE("eigensolver invariants on random matrices") {
    testutil::Rng rng(2024);
    for (int it = 0; it < 100; ++it) {
        int n = testutil::uniform_int(rng, 1, 12);
        SymmetricMatrix m = testutil::random_symmetric(n, rng);
        check_decomposition_invariants(m, eigendecompose(m));
    }
}

TEST_CASE("eigenvalues are permutation invariant") {
    testutil::Rng rng(31);
    for (int it = 0; it < 50; ++it) {
        int n = testutil::uniform_int(rng, 2, 10);
        SymmetricMatrix m = testutil::random_symmetric(n, rng);
        auto perm = testutil::random_permutation(n, rng);
        auto l1 = eigendecompose(m).lambdas;
        auto l2 = eigendecompose(conjugate(m, perm)).lambdas;
        for (int i = 0; i < n; ++i) CHECK(std::abs(l1[i] - l2[i]) <= 1e-8);
    }
}

TEST_CASE("spectral pair validation") {
    CHECK_THROWS_AS(make_spectral_pair(2, 2, {1.0, 1.0}, {1, 0, 0, 1}), DomainError);
    CHECK_THROWS_AS(make_spectral_pair(2, 2, {2.0, 1.0}, {1, 0, 0}), DomainError);
    SpectralPair sp = make_spectral_pair(2, 2, {2.0, 1.0}, {1, 0, 0, 1});
    CHECK(sp.v_at(1, 1) == 1.0);
}
