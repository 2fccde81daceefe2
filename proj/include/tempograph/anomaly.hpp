#pragma once

#include "tempograph/netgraph.hpp"
#include "tempograph/types.hpp"

#include <Eigen/Core>

#include <optional>
#include <set>
#include <vector>

namespace tempograph {

/// Share of each vertex's symmetrized weight that leaves its own module. Vertices with
/// no weight score 1. Requires annotated module labels.
Eigen::VectorXd isolation_scores(const NetworkGraph& graph);

struct AnomalyReport {
    std::set<Index> isolated;      // H
    std::set<Index> low_clustering; // S
    std::set<Index> candidates;     // H u S
    std::vector<Span> spans;
    Eigen::VectorXd scores;
    bool clamped = false;
    bool human_selection = false;
};

/// max(1, ceil(0.05 * V)).
Index default_k(Index vertex_count);

/// H = top k_h by isolation, S = bottom k_s by clustering coefficient; ties go to the
/// lower vertex index. Counts above V are clamped and flagged.
AnomalyReport detect(const NetworkGraph& graph, Index k_h, Index k_s);

/// Same as detect, but H is supplied by a human instead of the isolation proxy.
AnomalyReport detect_with_selection(const NetworkGraph& graph, const std::set<Index>& selected, Index k_s);

/// Number of time indices inside `truth` covered by `spans`.
Index covered_samples(const std::vector<Span>& spans, const std::vector<Span>& truth);

}  // namespace tempograph
