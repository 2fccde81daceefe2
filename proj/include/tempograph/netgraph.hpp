#pragma once

#include "tempograph/encode.hpp"
#include "tempograph/types.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace tempograph {

/// Weighted directed graph read off a transition field: vertex i is row/column i,
/// edge (i, j) carries M(i, j). Self-transitions are kept as a vertex attribute.
struct NetworkGraph {
    Eigen::MatrixXd weights;      // zero diagonal; zero entries mean "no edge"
    Eigen::VectorXd self_loops;
    Index segment_len = 1;
    Index source_len = 0;

    // Filled by annotate().
    Eigen::VectorXd pagerank;
    std::vector<int> modules;
    double modularity = 0.0;
    Eigen::VectorXd clustering;

    Index vertex_count() const { return weights.rows(); }
    Index edge_count() const;
    bool has_edge(Index from, Index to) const { return weights(from, to) > 0.0; }

    /// Time indices covered by vertex v.
    Span span(Index v) const;
};

NetworkGraph build_graph_from(const Eigen::MatrixXd& field, Index segment_len, Index source_len,
                              double threshold);

template <typename Scalar>
NetworkGraph build_graph(const TransitionField<Scalar>& field, double threshold = 0.0) {
    return build_graph_from(field.values.template cast<double>(), field.segment_len, field.source_len,
                            threshold);
}

/// W + W^T, the undirected view used for communities and isolation.
Eigen::MatrixXd symmetrized_weights(const NetworkGraph& graph);

/// 0/1 adjacency of the undirected simple graph: u ~ v iff an edge exists either way.
Eigen::MatrixXd undirected_adjacency(const NetworkGraph& graph);

// ---------------------------------------------------------------------------
// PageRank
// ---------------------------------------------------------------------------

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-12;
    int max_iterations = 10000;
};

/// Weighted power iteration; dangling vertices spread their mass uniformly.
/// Throws NumericError with the last L1 residual if it does not converge.
Eigen::VectorXd pagerank(const NetworkGraph& graph, const PageRankOptions& options = {});

// ---------------------------------------------------------------------------
// Communities
// ---------------------------------------------------------------------------

struct Partition {
    std::vector<int> labels;   // 0-based, numbered by first appearance in vertex order
    double modularity = 0.0;
    int community_count() const;
};

/// Newman modularity of `labels` on a symmetric weight matrix at the given resolution.
double modularity(const Eigen::MatrixXd& symmetric_weights, const std::vector<int>& labels,
                  double resolution = 1.0);

/// Louvain on the symmetrized graph. Visit order is a seeded permutation, so equal
/// inputs give equal partitions.
Partition louvain(const NetworkGraph& graph, double resolution = 1.0, std::uint64_t seed = 0);
Partition louvain_symmetric(const Eigen::MatrixXd& symmetric_weights, double resolution = 1.0,
                            std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Clustering and summary statistics
// ---------------------------------------------------------------------------

/// Local clustering coefficient on the unweighted undirected graph; degree < 2 gives 0.
Eigen::VectorXd clustering_coefficients(const NetworkGraph& graph);

struct NetworkStats {
    double avg_degree = 0.0;
    double avg_weighted_degree = 0.0;
    double diameter = 0.0;
    double density = 0.0;
    double modularity = 0.0;
    double community_count = 0.0;
    double avg_clustering = 0.0;
    double avg_path_length = 0.0;

    static constexpr int kCount = 8;
    Eigen::Matrix<double, kCount, 1> as_vector() const;
    static const char* const* names();
};

/// Eccentricity-based diameter and mean shortest path over the largest connected
/// component of the undirected graph (unweighted hops).
struct PathSummary {
    Index component_size = 0;
    double diameter = 0.0;
    double avg_path_length = 0.0;
};
PathSummary path_summary(const NetworkGraph& graph);

NetworkStats stats(const NetworkGraph& graph, std::uint64_t seed = 0);

struct AnalysisOptions {
    PageRankOptions pagerank;
    double resolution = 1.0;
    std::uint64_t seed = 0;
};

/// Fills pagerank, modules, modularity and clustering.
void annotate(NetworkGraph& graph, const AnalysisOptions& options = {});

}  // namespace tempograph
