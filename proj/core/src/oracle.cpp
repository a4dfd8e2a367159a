#include "spectralwl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectralwl/errors.hpp"

namespace spectralwl {

SpectralPair apply(const SignedPermutation& g, const SpectralPair& sp) {
    if (static_cast<int>(g.perm.size()) != sp.n || static_cast<int>(g.signs.size()) != sp.k)
        throw DomainError("signed permutation dimensions do not match the spectral pair");
    SpectralPair out = sp;
    for (int i = 0; i < sp.n; ++i)
        for (int c = 0; c < sp.k; ++c)
            out.v[static_cast<std::size_t>(g.perm[i]) * sp.k + c] =
                sp.v_at(i, c) * static_cast<double>(g.signs[c]);
    return out;
}

namespace {

bool witness_valid(const SignedPermutation& g, const SpectralPair& a, const SpectralPair& b,
                   double tol) {
    for (int i = 0; i < a.n; ++i)
        for (int c = 0; c < a.k; ++c)
            if (std::abs(a.v_at(i, c) * g.signs[c] - b.v_at(g.perm[i], c)) > tol) return false;
    return true;
}

// Backtracking over node assignments a→b. Column signs are derived, not
// enumerated: the first matched entry above tol in a column fixes its sign
// and later entries must agree. Candidate targets are pruned by per-entry
// magnitude compatibility of the rows.
class SignedIsoSearch {
public:
    SignedIsoSearch(const SpectralPair& a, const SpectralPair& b, double tol, bool skip_trivial)
        : a_(a), b_(b), tol_(tol), skip_trivial_(skip_trivial) {
        int n = a.n;
        candidates_.resize(n);
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                bool ok = true;
                for (int c = 0; c < a.k && ok; ++c)
                    ok = std::abs(std::abs(a.v_at(u, c)) - std::abs(b.v_at(w, c))) <= tol_;
                if (ok) candidates_[u].push_back(w);
            }
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return candidates_[x].size() < candidates_[y].size();
        });
        perm_.assign(n, -1);
        used_.assign(n, false);
        signs_.assign(a.k, 0);
    }

    std::optional<SignedPermutation> run() { return search(0); }

private:
    std::optional<SignedPermutation> search(std::size_t depth) {
        if (depth == perm_.size()) return finish();
        int u = order_[depth];
        for (int w : candidates_[u]) {
            if (used_[w]) continue;
            std::vector<int> set_cols;
            if (try_assign(u, w, set_cols)) {
                used_[w] = true;
                perm_[u] = w;
                if (auto r = search(depth + 1)) return r;
                used_[w] = false;
                perm_[u] = -1;
            }
            for (int c : set_cols) signs_[c] = 0;
        }
        return std::nullopt;
    }

    // A column's sign stays undetermined while every matched entry pair
    // tolerates both signs; the first pair that tolerates only one fixes it.
    // Completed assignments therefore satisfy every entry within tol by
    // construction, for any resolution of the still-undetermined columns.
    bool try_assign(int u, int w, std::vector<int>& set_cols) {
        for (int c = 0; c < a_.k; ++c) {
            double x = a_.v_at(u, c);
            double y = b_.v_at(w, c);
            bool plus_ok = std::abs(x - y) <= tol_;
            bool minus_ok = std::abs(x + y) <= tol_;
            if (signs_[c] != 0) {
                if (!(signs_[c] > 0 ? plus_ok : minus_ok)) return false;
                continue;
            }
            if (plus_ok && minus_ok) continue;
            if (!plus_ok && !minus_ok) return false;
            signs_[c] = plus_ok ? 1 : -1;
            set_cols.push_back(c);
        }
        return true;
    }

    std::optional<SignedPermutation> finish() {
        SignedPermutation g;
        g.perm = perm_;
        g.signs = signs_;
        int first_undetermined = -1;
        for (int c = 0; c < a_.k; ++c)
            if (g.signs[c] == 0) {
                if (first_undetermined < 0) first_undetermined = c;
                g.signs[c] = 1;
            }
        if (skip_trivial_) {
            bool identity = true;
            for (std::size_t i = 0; i < g.perm.size(); ++i)
                if (g.perm[i] != static_cast<int>(i)) identity = false;
            bool all_plus = std::all_of(g.signs.begin(), g.signs.end(),
                                        [](int s) { return s == 1; });
            if (identity && all_plus) {
                // an undetermined column tolerates either sign, so flipping
                // one is itself a non-trivial symmetry
                if (first_undetermined < 0) return std::nullopt;
                g.signs[first_undetermined] = -1;
            }
        }
        if (!witness_valid(g, a_, b_, tol_))
            throw NumericalError("internal error: candidate witness failed verification", 0.0);
        return g;
    }

    const SpectralPair& a_;
    const SpectralPair& b_;
    double tol_;
    bool skip_trivial_;
    std::vector<std::vector<int>> candidates_;
    std::vector<int> order_;
    std::vector<int> perm_;
    std::vector<bool> used_;
    std::vector<int> signs_;
};

void check_caps(const SpectralPair& a, const SpectralPair& b, int node_cap) {
    if (a.n != b.n || a.k != b.k)
        throw DomainError("spectral pairs must share n and K");
    if (a.n > node_cap)
        throw ResourceLimitError("n=" + std::to_string(a.n) + " exceeds the search cap " +
                                 std::to_string(node_cap));
}

}  // namespace

std::optional<SignedPermutation> find_signed_isomorphism(const SpectralPair& a,
                                                         const SpectralPair& b, double tol,
                                                         int node_cap) {
    check_caps(a, b, node_cap);
    for (int c = 0; c < a.k; ++c)
        if (std::abs(a.lambdas[c] - b.lambdas[c]) > tol) return std::nullopt;
    return SignedIsoSearch(a, b, tol, /*skip_trivial=*/false).run();
}

std::optional<SignedPermutation> find_nontrivial_automorphism(const SpectralPair& sp,
                                                              double tol, int node_cap) {
    check_caps(sp, sp, node_cap);
    return SignedIsoSearch(sp, sp, tol, /*skip_trivial=*/true).run();
}

bool automorphisms_trivial(const SpectralPair& sp, double tol, int node_cap) {
    return !find_nontrivial_automorphism(sp, tol, node_cap).has_value();
}

std::optional<std::vector<int>> perm_isomorphic_matrices(const SymmetricMatrix& m1,
                                                         const SymmetricMatrix& m2, double tol,
                                                         int node_cap) {
    if (m1.n() != m2.n()) throw DomainError("matrices must share their dimension");
    const int n = m1.n();
    if (n > node_cap)
        throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the search cap " +
                                 std::to_string(node_cap));
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    auto consistent = [&](int i, int w) {
        if (std::abs(m1(i, i) - m2(w, w)) > tol) return false;
        for (int j = 0; j < n; ++j)
            if (perm[j] >= 0 && std::abs(m1(i, j) - m2(w, perm[j])) > tol) return false;
        return true;
    };
    auto search = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || !consistent(i, w)) continue;
            used[w] = true;
            perm[i] = w;
            if (self(self, i + 1)) return true;
            used[w] = false;
            perm[i] = -1;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(m1(i, j) - m2(perm[i], perm[j])) > tol)
                throw NumericalError("internal error: permutation witness failed verification", 0.0);
    return perm;
}

}  // namespace spectralwl
