#include "spectralwl/canonicalize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "refine_internal.hpp"
#include "spectralwl/errors.hpp"
#include "spectralwl/parallel.hpp"

namespace spectralwl {

CanonResult equi_canonicalize(const SpectralPair& sp, const UpdateRule& rule, int rounds,
                              double sum_tol, const Quantizer& q) {
    if (rounds < 1) throw DomainError("rounds must be >= 1");
    EquiState state = equi_init(sp, q);
    for (int t = 0; t < rounds; ++t) state = equi_step(state, sp, rule, q);

    CanonResult r;
    r.n = sp.n;
    r.k = sp.k;
    r.signs.resize(sp.k);
    r.decidable.resize(sp.k);
    r.v_canon = sp.v;
    std::vector<double> column(sp.n);
    for (int c = 0; c < sp.k; ++c) {
        for (int i = 0; i < sp.n; ++i)
            column[i] = state.vecs[static_cast<std::size_t>(i) * sp.k + c];
        double sum = detail::canonical_sum(column);
        if (std::abs(sum) > sum_tol) {
            r.signs[c] = sum > 0 ? 1 : -1;
            r.decidable[c] = true;
            if (r.signs[c] < 0)
                for (int i = 0; i < sp.n; ++i) {
                    auto idx = static_cast<std::size_t>(i) * sp.k + c;
                    r.v_canon[idx] = -r.v_canon[idx];
                }
        } else {
            r.signs[c] = 0;
            r.decidable[c] = false;
        }
    }
    return r;
}

std::vector<bool> sum_zero_flags(const SpectralPair& sp, double tol) {
    std::vector<bool> flags(sp.k);
    std::vector<double> column(sp.n);
    for (int c = 0; c < sp.k; ++c) {
        for (int i = 0; i < sp.n; ++i) column[i] = sp.v_at(i, c);
        flags[c] = std::abs(detail::canonical_sum(column)) <= tol;
    }
    return flags;
}

bool column_self_symmetric(std::span<const double> column, double tol) {
    // A permutation mapping v to -v exists iff the entry multiset can be
    // matched up as x ↔ -x; for values on a line the sorted pairing is an
    // optimal matching, so checking it decides existence.
    std::vector<double> sorted(column.begin(), column.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t n = sorted.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(sorted[i] + sorted[n - 1 - i]) > tol) return false;
    return true;
}

ColumnFlags detect_uncanonicalizable(const SpectralPair& sp, double tol, int node_cap) {
    if (sp.n > node_cap)
        throw ResourceLimitError("n=" + std::to_string(sp.n) +
                                 " exceeds the self-symmetry search cap " +
                                 std::to_string(node_cap));
    ColumnFlags flags;
    flags.sum_zero = sum_zero_flags(sp, tol);
    flags.self_symmetric.resize(sp.k);
    for (int c = 0; c < sp.k; ++c) {
        std::vector<double> col(sp.n);
        for (int i = 0; i < sp.n; ++i) col[i] = sp.v_at(i, c);
        flags.self_symmetric[c] = column_self_symmetric(col, tol);
    }
    return flags;
}

namespace {

struct GraphCanonCounts {
    int simple_columns = 0;
    int input_sum_zero = 0;
    int output_sum_zero = 0;
    int checked_self_symmetry = 0;
    int input_self_symmetric = 0;
    int output_self_symmetric = 0;
    bool over_cap = false;
};

// Restricts the full decomposition to multiplicity-1 columns; nullopt when a
// graph has no simple eigenvectors.
std::optional<SpectralPair> simple_columns_pair(const EigenDecomposition& ed, double eig_tol) {
    std::vector<int> cols;
    for (const auto& g : group_eigenvalues(ed.lambdas, eig_tol))
        if (g.multiplicity == 1) cols.push_back(g.column_indices[0]);
    if (cols.empty()) return std::nullopt;
    int k = static_cast<int>(cols.size());
    std::vector<double> lambdas(k);
    std::vector<double> v(static_cast<std::size_t>(ed.n) * k);
    for (int c = 0; c < k; ++c) {
        lambdas[c] = ed.lambdas[cols[c]];
        for (int i = 0; i < ed.n; ++i)
            v[static_cast<std::size_t>(i) * k + c] = ed.v_at(i, cols[c]);
    }
    return make_spectral_pair(ed.n, k, std::move(lambdas), std::move(v), eig_tol);
}

GraphCanonCounts graph_canon_counts(const Graph& g, const UpdateRule& rule, int rounds,
                                    const CanonReportOptions& opt, const Quantizer& q) {
    GraphCanonCounts counts;
    auto pair = simple_columns_pair(eigendecompose(laplacian(g)), opt.eig_tol);
    if (!pair) return counts;
    const SpectralPair& sp = *pair;
    counts.simple_columns = sp.k;

    EquiState state = equi_init(sp, q);
    for (int t = 0; t < rounds; ++t) state = equi_step(state, sp, rule, q);

    counts.over_cap = sp.n > opt.node_cap;
    std::vector<double> in_col(sp.n), out_col(sp.n), scratch(sp.n);
    for (int c = 0; c < sp.k; ++c) {
        for (int i = 0; i < sp.n; ++i) {
            in_col[i] = sp.v_at(i, c);
            out_col[i] = state.vecs[static_cast<std::size_t>(i) * sp.k + c];
        }
        scratch = in_col;
        if (std::abs(detail::canonical_sum(scratch)) <= opt.sum_tol) ++counts.input_sum_zero;
        scratch = out_col;
        if (std::abs(detail::canonical_sum(scratch)) <= opt.sum_tol) ++counts.output_sum_zero;
        if (!counts.over_cap) {
            ++counts.checked_self_symmetry;
            if (column_self_symmetric(in_col, opt.match_tol)) ++counts.input_self_symmetric;
            if (column_self_symmetric(out_col, opt.match_tol)) ++counts.output_self_symmetric;
        }
    }
    return counts;
}

}  // namespace

CanonReport canonicalization_report(std::span<const Graph> corpus, const UpdateRule& rule,
                                    int rounds, const CanonReportOptions& options,
                                    const Quantizer& q) {
    if (corpus.empty()) throw DomainError("corpus must be non-empty");
    if (rounds < 1) throw DomainError("rounds must be >= 1");

    std::vector<GraphCanonCounts> per_graph(corpus.size());
    parallel_for_index(corpus.size(), options.workers, [&](std::size_t i) {
        per_graph[i] = graph_canon_counts(corpus[i], rule, rounds, options, q);
    });

    CanonReport report;
    int input_sum_zero = 0, output_sum_zero = 0;
    int input_self = 0, output_self = 0;
    for (const auto& c : per_graph) {
        ++report.graphs_processed;
        report.n_simple_eigenvectors += c.simple_columns;
        report.n_self_symmetry_checked += c.checked_self_symmetry;
        if (c.over_cap) ++report.graphs_skipped_self_symmetry;
        input_sum_zero += c.input_sum_zero;
        output_sum_zero += c.output_sum_zero;
        input_self += c.input_self_symmetric;
        output_self += c.output_self_symmetric;
    }
    if (report.n_simple_eigenvectors > 0) {
        report.has_percentages = true;
        double denom = report.n_simple_eigenvectors;
        report.input_sum_zero_pct = 100.0 * input_sum_zero / denom;
        report.output_sum_zero_pct = 100.0 * output_sum_zero / denom;
        if (report.n_self_symmetry_checked > 0) {
            double sdenom = report.n_self_symmetry_checked;
            report.input_uncanonicalizable_pct = 100.0 * input_self / sdenom;
            report.output_uncanonicalizable_pct = 100.0 * output_self / sdenom;
        }
    }
    return report;
}

}  // namespace spectralwl
