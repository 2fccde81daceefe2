#include "tempograph/anomaly.hpp"

#include "tempograph/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tempograph {

Eigen::VectorXd isolation_scores(const NetworkGraph& graph) {
    const Index n = graph.vertex_count();
    if (static_cast<Index>(graph.modules.size()) != n) {
        throw ArgumentError("isolation_scores: graph has no module labels");
    }
    const Eigen::MatrixXd sym = symmetrized_weights(graph);
    Eigen::VectorXd scores(n);
    for (Index v = 0; v < n; ++v) {
        const double total = sym.row(v).sum();
        if (total <= 0.0) {
            scores(v) = 1.0;
            continue;
        }
        double outside = 0.0;
        for (Index u = 0; u < n; ++u) {
            if (graph.modules[static_cast<std::size_t>(u)] != graph.modules[static_cast<std::size_t>(v)]) {
                outside += sym(v, u);
            }
        }
        scores(v) = outside / total;
    }
    return scores;
}

Index default_k(Index vertex_count) {
    return std::max<Index>(1, static_cast<Index>(std::ceil(0.05 * static_cast<double>(vertex_count))));
}

namespace {

// First k vertices of the ordering `before` (ties broken by lower index).
template <typename Less>
std::set<Index> select_top(Index n, Index k, Less before) {
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), before);
    return {order.begin(), order.begin() + k};
}

Index clamp_k(Index k, Index n, bool& clamped) {
    if (k < 0) throw ArgumentError("anomaly: k must be >= 0");
    if (k > n) {
        clamped = true;
        return n;
    }
    return k;
}

void finish(const NetworkGraph& graph, AnomalyReport& report) {
    report.candidates = report.isolated;
    report.candidates.insert(report.low_clustering.begin(), report.low_clustering.end());
    report.spans = selection_to_spans(graph, report.candidates);
}

std::set<Index> lowest_clustering(const NetworkGraph& graph, Index k) {
    const Eigen::VectorXd cc =
        graph.clustering.size() == graph.vertex_count() ? graph.clustering : clustering_coefficients(graph);
    return select_top(graph.vertex_count(), k, [&cc](Index a, Index b) { return cc(a) < cc(b); });
}

}  // namespace

AnomalyReport detect(const NetworkGraph& graph, Index k_h, Index k_s) {
    const Index n = graph.vertex_count();
    AnomalyReport report;
    k_h = clamp_k(k_h, n, report.clamped);
    k_s = clamp_k(k_s, n, report.clamped);
    report.scores = isolation_scores(graph);
    const Eigen::VectorXd& scores = report.scores;
    report.isolated = select_top(n, k_h, [&scores](Index a, Index b) { return scores(a) > scores(b); });
    report.low_clustering = lowest_clustering(graph, k_s);
    finish(graph, report);
    return report;
}

AnomalyReport detect_with_selection(const NetworkGraph& graph, const std::set<Index>& selected, Index k_s) {
    const Index n = graph.vertex_count();
    AnomalyReport report;
    report.human_selection = true;
    for (Index v : selected) {
        if (v < 0 || v >= n) throw ArgumentError("anomaly: selected vertex " + std::to_string(v) + " out of range");
    }
    k_s = clamp_k(k_s, n, report.clamped);
    report.scores = isolation_scores(graph);
    report.isolated = selected;
    report.low_clustering = lowest_clustering(graph, k_s);
    finish(graph, report);
    return report;
}

Index covered_samples(const std::vector<Span>& spans, const std::vector<Span>& truth) {
    Index covered = 0;
    for (const Span& t : merge_spans(truth)) {
        for (const Span& s : merge_spans(spans)) {
            covered += std::max<Index>(0, std::min(s.end, t.end) - std::max(s.start, t.start));
        }
    }
    return covered;
}

}  // namespace tempograph
