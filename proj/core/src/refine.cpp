#include "spectralwl/refine.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>

#include "refine_internal.hpp"
#include "spectralwl/errors.hpp"

namespace spectralwl {

namespace detail {

std::vector<int> intern_sorted(const std::vector<Sig>& sigs) {
    std::vector<Sig> uniq(sigs);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> ids(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        ids[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[i]) -
                                  uniq.begin());
    return ids;
}

std::vector<Sig> init_signatures(const SpectralPair& sp, const Quantizer& q) {
    std::vector<std::int64_t> qlam = q.quantize(sp.lambdas);
    std::vector<Sig> sigs(sp.n);
    for (int i = 0; i < sp.n; ++i) {
        Sig s;
        s.reserve(static_cast<std::size_t>(2) * sp.k);
        s.insert(s.end(), qlam.begin(), qlam.end());
        for (int c = 0; c < sp.k; ++c) {
            double x = sp.v_at(i, c);
            s.push_back(q.quantize(x * x));
        }
        sigs[i] = std::move(s);
    }
    return sigs;
}

std::vector<Sig> step_signatures(const std::vector<int>& colors, int n, int k,
                                 const std::vector<double>& vecs, const Quantizer& q) {
    std::vector<Sig> sigs(n);
    std::vector<Sig> pairs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Sig& p = pairs[static_cast<std::size_t>(j)];
            p.clear();
            p.reserve(1 + static_cast<std::size_t>(k));
            p.push_back(colors[j]);
            for (int c = 0; c < k; ++c)
                p.push_back(q.quantize(vecs[static_cast<std::size_t>(i) * k + c] *
                                       vecs[static_cast<std::size_t>(j) * k + c]));
        }
        std::sort(pairs.begin(), pairs.end());
        Sig s;
        s.reserve(1 + static_cast<std::size_t>(n) * (1 + k));
        s.push_back(colors[i]);
        for (const Sig& p : pairs) s.insert(s.end(), p.begin(), p.end());
        sigs[i] = std::move(s);
    }
    return sigs;
}

int distinct_count(const std::vector<int>& colors) {
    std::set<int> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
}

bool same_multiset(std::vector<int> a, std::vector<int> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::pair<std::vector<int>, std::vector<int>> intern_pair(std::vector<Sig> sa,
                                                          std::vector<Sig> sb) {
    std::size_t na = sa.size();
    sa.insert(sa.end(), std::make_move_iterator(sb.begin()), std::make_move_iterator(sb.end()));
    std::vector<int> ids = intern_sorted(sa);
    std::vector<int> ca(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<int> cb(ids.begin() + static_cast<std::ptrdiff_t>(na), ids.end());
    return {std::move(ca), std::move(cb)};
}

double canonical_sum(std::vector<double>& xs) {
    std::sort(xs.begin(), xs.end(), [](double a, double b) {
        double fa = std::fabs(a), fb = std::fabs(b);
        if (fa != fb) return fa < fb;
        return a < b;
    });
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
}

}  // namespace detail

using detail::distinct_count;
using detail::init_signatures;
using detail::intern_pair;
using detail::intern_sorted;
using detail::same_multiset;
using detail::step_signatures;

int ColorState::class_count() const { return distinct_count(colors); }

ColorState epnn_init(const SpectralPair& sp, const Quantizer& q) {
    ColorState state;
    state.round = 0;
    state.colors = intern_sorted(init_signatures(sp, q));
    state.history = {state.colors};
    return state;
}

ColorState epnn_step(const ColorState& state, const SpectralPair& sp, const Quantizer& q) {
    if (static_cast<int>(state.colors.size()) != sp.n)
        throw DomainError("color state does not match the spectral pair's node count");
    ColorState next;
    next.round = state.round + 1;
    next.colors = intern_sorted(step_signatures(state.colors, sp.n, sp.k, sp.v, q));
    next.history = state.history;
    next.history.push_back(next.colors);
    return next;
}

GlobalColor epnn_readout(const ColorState& state) {
    std::vector<int> sorted = state.colors;
    std::sort(sorted.begin(), sorted.end());
    GlobalColor h = 1469598103934665603ull;  // FNV-1a
    for (int c : sorted) {
        auto x = static_cast<std::uint64_t>(static_cast<std::int64_t>(c));
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

SeparationVerdict epnn_distinguish(const SpectralPair& a, const SpectralPair& b,
                                   int max_rounds, const Quantizer& q) {
    if (max_rounds <= 0) throw DomainError("max_rounds must be positive");
    if (a.k != b.k) throw DomainError("spectral pairs have different K");

    SeparationVerdict verdict;
    auto [ca, cb] = intern_pair(init_signatures(a, q), init_signatures(b, q));
    std::vector<int> joint = ca;
    joint.insert(joint.end(), cb.begin(), cb.end());
    verdict.color_class_counts.push_back(distinct_count(joint));
    if (!same_multiset(ca, cb)) {
        verdict.outcome = Outcome::separated;
        verdict.round = 0;
        verdict.rounds_run = 0;
        return verdict;
    }
    int prev_a = distinct_count(ca);
    int prev_b = distinct_count(cb);
    for (int t = 1; t <= max_rounds; ++t) {
        auto [na, nb] = intern_pair(step_signatures(ca, a.n, a.k, a.v, q),
                                    step_signatures(cb, b.n, b.k, b.v, q));
        ca = std::move(na);
        cb = std::move(nb);
        joint = ca;
        joint.insert(joint.end(), cb.begin(), cb.end());
        verdict.color_class_counts.push_back(distinct_count(joint));
        verdict.rounds_run = t;
        if (!same_multiset(ca, cb)) {
            verdict.outcome = Outcome::separated;
            verdict.round = t;
            return verdict;
        }
        int cur_a = distinct_count(ca);
        int cur_b = distinct_count(cb);
        if (cur_a == prev_a && cur_b == prev_b) break;  // both partitions stable
        prev_a = cur_a;
        prev_b = cur_b;
    }
    verdict.outcome = Outcome::indistinguishable;
    return verdict;
}

ReconstructionResult reconstruct_from_purview(const SpectralPair& sp, double zero_tol) {
    int anchor = -1;
    for (int i = 0; i < sp.n && anchor < 0; ++i) {
        bool zero_free = true;
        for (int c = 0; c < sp.k; ++c)
            if (std::abs(sp.v_at(i, c)) <= zero_tol) {
                zero_free = false;
                break;
            }
        if (zero_free) anchor = i;
    }
    if (anchor < 0)
        throw FailedPreconditionError("no zero-free row exists to anchor the sign choice");
    ReconstructionResult r;
    r.anchor_row = anchor;
    r.v_recovered = sp.v;
    for (int c = 0; c < sp.k; ++c) {
        if (sp.v_at(anchor, c) < 0.0)
            for (int i = 0; i < sp.n; ++i) {
                auto idx = static_cast<std::size_t>(i) * sp.k + c;
                r.v_recovered[idx] = -r.v_recovered[idx];
            }
    }
    return r;
}

NodeIdResult unique_node_ids(const SpectralPair& sp, const Quantizer& q) {
    ColorState state = epnn_step(epnn_init(sp, q), sp, q);
    NodeIdResult r;
    r.ids = state.colors;
    r.unique = distinct_count(r.ids) == sp.n;
    return r;
}

SeparationVerdict wl1_distinguish(const Graph& a, const Graph& b, int max_rounds) {
    if (max_rounds <= 0) throw DomainError("max_rounds must be positive");
    auto neighbors = [](const Graph& g) {
        std::vector<std::vector<int>> adj(g.n);
        for (auto [u, v] : g.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    };
    auto adj_a = neighbors(a);
    auto adj_b = neighbors(b);
    auto step = [](const std::vector<int>& colors, const std::vector<std::vector<int>>& adj) {
        std::vector<detail::Sig> sigs(colors.size());
        for (std::size_t i = 0; i < colors.size(); ++i) {
            std::vector<int> nb;
            nb.reserve(adj[i].size());
            for (int j : adj[i]) nb.push_back(colors[j]);
            std::sort(nb.begin(), nb.end());
            detail::Sig s;
            s.reserve(1 + nb.size());
            s.push_back(colors[i]);
            s.insert(s.end(), nb.begin(), nb.end());
            sigs[i] = std::move(s);
        }
        return sigs;
    };

    SeparationVerdict verdict;
    std::vector<int> ca(a.n, 0), cb(b.n, 0);
    verdict.color_class_counts.push_back(1);
    if (a.n != b.n) {
        verdict.outcome = Outcome::separated;
        verdict.round = 0;
        return verdict;
    }
    int prev_a = 1, prev_b = 1;
    for (int t = 1; t <= max_rounds; ++t) {
        auto [na, nb] = intern_pair(step(ca, adj_a), step(cb, adj_b));
        ca = std::move(na);
        cb = std::move(nb);
        std::vector<int> joint = ca;
        joint.insert(joint.end(), cb.begin(), cb.end());
        verdict.color_class_counts.push_back(distinct_count(joint));
        verdict.rounds_run = t;
        if (!same_multiset(ca, cb)) {
            verdict.outcome = Outcome::separated;
            verdict.round = t;
            return verdict;
        }
        int cur_a = distinct_count(ca);
        int cur_b = distinct_count(cb);
        if (cur_a == prev_a && cur_b == prev_b) break;
        prev_a = cur_a;
        prev_b = cur_b;
    }
    verdict.outcome = Outcome::indistinguishable;
    return verdict;
}

}  // namespace spectralwl
