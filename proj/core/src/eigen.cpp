#include "spectralwl/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectralwl/errors.hpp"

namespace spectralwl {

SpectralPair make_spectral_pair(int n, int k, std::vector<double> lambdas,
                                std::vector<double> v, double gap_tol) {
    if (n <= 0 || k <= 0 || k > n) throw DomainError("invalid spectral pair dimensions");
    if (lambdas.size() != static_cast<std::size_t>(k) ||
        v.size() != static_cast<std::size_t>(n) * k)
        throw DomainError("spectral pair field sizes do not match n, k");
    for (int q = 0; q + 1 < k; ++q)
        if (!(lambdas[q] - lambdas[q + 1] > gap_tol))
            throw DomainError(
                "eigenvalues must be strictly decreasing with gaps above eig_tol; positions " +
                std::to_string(q) + " and " + std::to_string(q + 1) + " are separated by " +
                std::to_string(lambdas[q] - lambdas[q + 1]));
    SpectralPair sp;
    sp.n = n;
    sp.k = k;
    sp.lambdas = std::move(lambdas);
    sp.v = std::move(v);
    return sp;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-12;  // relative to 1 + ||A||_F

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<std::size_t>(i) * n + j] *
                             a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigendecompose(const SymmetricMatrix& m) {
    const int n = m.n();
    std::vector<double> a = m.entries();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    double fro = 0.0;
    for (double x : a) fro += x * x;
    fro = std::sqrt(fro);
    const double thresh = kOffDiagTol * (1.0 + fro);

    auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<std::size_t>(i) * n + j];
    };

    int sweeps = 0;
    while (off_diagonal_norm(a, n) > thresh && sweeps < kMaxSweeps) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(a, p, q);
                if (apq == 0.0) continue;
                double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(a, p, k), aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = at(v, k, p), vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
        ++sweeps;
    }
    double residual = off_diagonal_norm(a, n);
    if (residual > thresh)
        throw NumericalError("eigendecomposition did not converge within " +
                                 std::to_string(kMaxSweeps) + " sweeps",
                             residual);

    std::vector<double> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = a[static_cast<std::size_t>(i) * n + i];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return lam[x] > lam[y]; });

    EigenDecomposition ed;
    ed.n = n;
    ed.lambdas.resize(n);
    ed.v.resize(static_cast<std::size_t>(n) * n);
    for (int q = 0; q < n; ++q) {
        ed.lambdas[q] = lam[order[q]];
        for (int i = 0; i < n; ++i)
            ed.v[static_cast<std::size_t>(i) * n + q] = v[static_cast<std::size_t>(i) * n + order[q]];
    }
    return ed;
}

std::vector<EigenvalueGroup> group_eigenvalues(std::span<const double> lambdas, double eig_tol) {
    if (eig_tol <= 0) throw DomainError("eig_tol must be positive");
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (lambdas[i] - lambdas[i - 1] > eig_tol)
            throw DomainError("eigenvalues are not sorted non-increasing");
    std::vector<EigenvalueGroup> groups;
    if (lambdas.empty()) return groups;
    EigenvalueGroup cur;
    cur.representative = lambdas[0];
    cur.column_indices = {0};
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        if (lambdas[i - 1] - lambdas[i] > eig_tol) {
            cur.multiplicity = static_cast<int>(cur.column_indices.size());
            groups.push_back(std::move(cur));
            cur = EigenvalueGroup{};
            cur.representative = lambdas[i];
        }
        cur.column_indices.push_back(static_cast<int>(i));
    }
    cur.multiplicity = static_cast<int>(cur.column_indices.size());
    groups.push_back(std::move(cur));
    return groups;
}

bool is_simple_spectrum(const EigenDecomposition& ed, double eig_tol) {
    for (const auto& g : group_eigenvalues(ed.lambdas, eig_tol))
        if (g.multiplicity > 1) return false;
    return true;
}

SpectralPair truncate(const EigenDecomposition& ed, int k, double eig_tol,
                      TruncateOrder order) {
    if (k <= 0 || k > ed.n) throw DomainError("k must be in [1, n]");
    std::vector<int> selected;
    if (order == TruncateOrder::largest) {
        for (int q = 0; q < k; ++q) selected.push_back(q);
    } else {
        // smallest eigenvalues, skipping the ones within eig_tol of zero
        for (int q = ed.n - 1; q >= 0 && static_cast<int>(selected.size()) < k; --q)
            if (std::abs(ed.lambdas[q]) > eig_tol) selected.push_back(q);
        if (static_cast<int>(selected.size()) < k)
            throw DomainError("fewer than k nonzero eigenvalues available");
        std::reverse(selected.begin(), selected.end());  // descending eigenvalue order
    }
    for (std::size_t i = 0; i + 1 < selected.size(); ++i) {
        if (!(ed.lambdas[selected[i]] - ed.lambdas[selected[i + 1]] > eig_tol))
            throw NotSimpleError("selected eigenvalues " + std::to_string(selected[i]) + " and " +
                                     std::to_string(selected[i + 1]) +
                                     " are not separated by more than eig_tol",
                                 {selected[i], selected[i + 1]});
    }
    std::vector<double> lambdas(k);
    std::vector<double> v(static_cast<std::size_t>(ed.n) * k);
    for (int c = 0; c < k; ++c) {
        lambdas[c] = ed.lambdas[selected[c]];
        for (int i = 0; i < ed.n; ++i)
            v[static_cast<std::size_t>(i) * k + c] = ed.v_at(i, selected[c]);
    }
    return make_spectral_pair(ed.n, k, std::move(lambdas), std::move(v), eig_tol);
}

}  // namespace spectralwl
