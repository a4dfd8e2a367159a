#include "spectralwl/stats.hpp"

#include <cmath>

#include "spectralwl/eigen.hpp"
#include "spectralwl/errors.hpp"
#include "spectralwl/parallel.hpp"

namespace spectralwl {

GraphSpectralStats graph_stats(const Graph& g, double eig_tol, double zero_tol) {
    if (g.n < 1) throw DomainError("graph must have at least one node");
    EigenDecomposition ed = eigendecompose(laplacian(g));

    GraphSpectralStats s;
    s.n = g.n;
    s.has_distinct = true;
    for (const auto& grp : group_eigenvalues(ed.lambdas, eig_tol)) {
        if (grp.multiplicity > 1) s.has_distinct = false;
        if (grp.multiplicity == 2) ++s.count_mult2;
        if (grp.multiplicity == 3) ++s.count_mult3;
    }
    s.has_mult2 = s.count_mult2 > 0;
    s.has_mult3 = s.count_mult3 > 0;

    std::vector<int> zeros_per_column(g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        bool row_full = true;
        for (int c = 0; c < g.n; ++c) {
            if (std::abs(ed.v_at(i, c)) <= zero_tol) {
                ++s.num_zeros;
                ++zeros_per_column[c];
                row_full = false;
            }
        }
        if (row_full) s.has_full_row = true;
    }
    s.le_one_zero_per_vec = true;
    for (int c = 0; c < g.n; ++c)
        if (zeros_per_column[c] > 1) s.le_one_zero_per_vec = false;
    s.ratio_zeros = static_cast<double>(s.num_zeros) / g.n;
    s.zeros_lt_vertices = s.num_zeros < g.n;
    s.any_condition = s.has_full_row || s.le_one_zero_per_vec || s.zeros_lt_vertices;
    return s;
}

DatasetStatsReport dataset_report(std::span<const Graph> corpus, double eig_tol,
                                  double zero_tol, int workers) {
    if (corpus.empty()) throw DomainError("corpus must be non-empty");

    DatasetStatsReport r;
    r.graph_count = static_cast<int>(corpus.size());
    r.per_graph.resize(corpus.size());
    parallel_for_index(corpus.size(), workers, [&](std::size_t i) {
        r.per_graph[i] = graph_stats(corpus[i], eig_tol, zero_tol);
    });

    double count = static_cast<double>(r.graph_count);
    int distinct = 0, mult2 = 0, mult3 = 0, full_row = 0, le_one = 0, lt_vertices = 0, any = 0;
    for (const auto& s : r.per_graph) {
        distinct += s.has_distinct;
        mult2 += s.has_mult2;
        mult3 += s.has_mult3;
        full_row += s.has_full_row;
        le_one += s.le_one_zero_per_vec;
        lt_vertices += s.zeros_lt_vertices;
        any += s.any_condition;
        r.avg_count_mult2 += s.count_mult2;
        r.avg_count_mult3 += s.count_mult3;
        r.avg_num_zeros += s.num_zeros;
        r.avg_ratio_zeros += s.ratio_zeros;
    }
    r.pct_distinct = 100.0 * distinct / count;
    r.pct_mult2 = 100.0 * mult2 / count;
    r.pct_mult3 = 100.0 * mult3 / count;
    r.pct_full_row = 100.0 * full_row / count;
    r.pct_le_one_zero = 100.0 * le_one / count;
    r.pct_zeros_lt_vertices = 100.0 * lt_vertices / count;
    r.pct_any_condition = 100.0 * any / count;
    r.avg_count_mult2 /= count;
    r.avg_count_mult3 /= count;
    r.avg_num_zeros /= count;
    r.avg_ratio_zeros /= count;
    return r;
}

}  // namespace spectralwl
