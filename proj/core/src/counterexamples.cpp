#include "spectralwl/counterexamples.hpp"

#include <array>
#include <cmath>

#include "spectralwl/errors.hpp"

namespace spectralwl {

namespace {

// The four sign patterns of {-1,1}^2 (a Klein four-group under elementwise
// product, identity z0) plus the zero pad.
constexpr std::array<std::array<double, 2>, 4> kZ = {{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};

int zmul(int a, int b) {
    int x = (kZ[a][0] * kZ[b][0] < 0) ? 1 : 0;
    int y = (kZ[a][1] * kZ[b][1] < 0) ? 1 : 0;
    return x + 2 * y;  // index of the elementwise product
}

// 12x6 block matrix: 3 groups of 4 nodes; each node carries two sign-pattern
// bands and one zero band. third_b2/third_b3 give the third-band pattern for
// the middle and last group as a function of the node's own pattern index.
std::vector<double> build_blocks(const std::array<int, 4>& third_b2,
                                 const std::array<int, 4>& third_b3) {
    std::vector<double> v(12 * 6, 0.0);
    auto put = [&](int node, int band, const std::array<double, 2>& z) {
        v[static_cast<std::size_t>(node) * 6 + 2 * band] = z[0];
        v[static_cast<std::size_t>(node) * 6 + 2 * band + 1] = z[1];
    };
    for (int a = 0; a < 4; ++a) {
        put(a, 0, kZ[a]);
        put(a, 1, kZ[a]);
        put(4 + a, 1, kZ[a]);
        put(4 + a, 2, kZ[third_b2[a]]);
        put(8 + a, 0, kZ[a]);
        put(8 + a, 2, kZ[third_b3[a]]);
    }
    return v;
}

std::vector<double> lambdas_or_default(const std::optional<std::array<double, 6>>& lambdas) {
    std::array<double, 6> lam = lambdas.value_or(kDefaultCounterexampleLambdas);
    for (int q = 0; q + 1 < 6; ++q)
        if (!(lam[q] > lam[q + 1]))
            throw DomainError("counterexample eigenvalues must be strictly decreasing");
    return {lam.begin(), lam.end()};
}

}  // namespace

SpectralPairDuo gen_epnn_counterexample(std::optional<std::array<double, 6>> lambdas) {
    std::vector<double> lam = lambdas_or_default(lambdas);
    // First pair: third bands repeat the node's own pattern. Second pair:
    // third bands are shifted by z1 (middle group) and z2 (last group), so
    // any global column-sign assignment is over-constrained across groups.
    std::array<int, 4> identity = {0, 1, 2, 3};
    std::array<int, 4> shift1, shift2;
    for (int a = 0; a < 4; ++a) {
        shift1[a] = zmul(1, a);
        shift2[a] = zmul(2, a);
    }
    SpectralPairDuo duo;
    duo.first = make_spectral_pair(12, 6, lam, build_blocks(identity, identity));
    duo.second = make_spectral_pair(12, 6, lam, build_blocks(shift1, shift2));
    return duo;
}

namespace {

// 24-node extension: below each node sits a partner whose first nonzero band
// is scaled by 2 and second by -1/2, which zeroes every cross-column inner
// product; columns are then normalized.
SpectralPair extend_orthonormal(const SpectralPair& sp) {
    const int n = sp.n, k = sp.k;
    std::vector<double> v(static_cast<std::size_t>(2 * n) * k, 0.0);
    for (int i = 0; i < n; ++i) {
        int first_band = -1, second_band = -1;
        for (int band = 0; band < k / 2; ++band) {
            bool nonzero = sp.v_at(i, 2 * band) != 0.0 || sp.v_at(i, 2 * band + 1) != 0.0;
            if (!nonzero) continue;
            if (first_band < 0) first_band = band;
            else second_band = band;
        }
        for (int c = 0; c < k; ++c) {
            double x = sp.v_at(i, c);
            v[static_cast<std::size_t>(i) * k + c] = x;
            double scale = (c / 2 == first_band) ? 2.0 : (c / 2 == second_band ? -0.5 : 0.0);
            v[static_cast<std::size_t>(n + i) * k + c] = scale * x;
        }
    }
    for (int c = 0; c < k; ++c) {
        double norm2 = 0.0;
        for (int i = 0; i < 2 * n; ++i) {
            double x = v[static_cast<std::size_t>(i) * k + c];
            norm2 += x * x;
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < 2 * n; ++i) v[static_cast<std::size_t>(i) * k + c] *= inv;
    }
    return make_spectral_pair(2 * n, k, sp.lambdas, std::move(v));
}

}  // namespace

SpectralPairDuo gen_orthonormal_counterexample(std::optional<std::array<double, 6>> lambdas) {
    SpectralPairDuo duo = gen_epnn_counterexample(lambdas);
    duo.first = extend_orthonormal(duo.first);
    duo.second = extend_orthonormal(duo.second);
    return duo;
}

OgePair gen_oge_pair() {
    const std::array<double, 4> u11 = {1, -1, 1, -1};
    const std::array<double, 4> u21 = {-1, 1, 1, -1};
    const std::array<double, 4> u_shared = {2, 3, 4, 5};
    auto assemble = [&](const std::array<double, 4>& first) {
        std::vector<double> m(16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m[static_cast<std::size_t>(i) * 4 + j] =
                    1.0 * first[i] * first[j] + 2.0 * u_shared[i] * u_shared[j];
        return SymmetricMatrix(4, std::move(m));
    };
    OgePair p;
    p.u1.resize(8);
    p.u2.resize(8);
    for (int i = 0; i < 4; ++i) {
        p.u1[static_cast<std::size_t>(i) * 2] = u11[i];
        p.u1[static_cast<std::size_t>(i) * 2 + 1] = u_shared[i];
        p.u2[static_cast<std::size_t>(i) * 2] = u21[i];
        p.u2[static_cast<std::size_t>(i) * 2 + 1] = u_shared[i];
    }
    p.l1 = assemble(u11);
    p.l2 = assemble(u21);
    return p;
}

}  // namespace spectralwl
