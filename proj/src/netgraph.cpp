#include "tempograph/netgraph.hpp"

#include "tempograph/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace tempograph {

NetworkGraph build_graph_from(const Eigen::MatrixXd& field, Index segment_len, Index source_len, double threshold) {
    if (field.rows() != field.cols()) throw ArgumentError("build_graph: field must be square");
    if (!(threshold >= 0.0)) throw ArgumentError("build_graph: threshold must be >= 0");
    NetworkGraph g;
    g.segment_len = segment_len;
    g.source_len = source_len;
    g.self_loops = field.diagonal();
    g.weights = (field.array() > threshold).select(field, 0.0);
    g.weights.diagonal().setZero();
    return g;
}

Index NetworkGraph::edge_count() const {
    return (weights.array() > 0.0).count();
}

Span NetworkGraph::span(Index v) const {
    return vertex_span(segment_len, source_len, v);
}

Eigen::MatrixXd symmetrized_weights(const NetworkGraph& graph) {
    return graph.weights + graph.weights.transpose();
}

Eigen::MatrixXd undirected_adjacency(const NetworkGraph& graph) {
    const auto present = (graph.weights.array() > 0.0).cast<double>();
    return (present.matrix() + present.matrix().transpose()).cwiseMin(1.0);
}

Eigen::VectorXd pagerank(const NetworkGraph& graph, const PageRankOptions& options) {
    const Index n = graph.vertex_count();
    if (n == 0) throw ArgumentError("pagerank: graph is empty");
    if (!(options.damping > 0.0 && options.damping < 1.0)) {
        throw ArgumentError("pagerank: damping must lie in (0, 1)");
    }

    const Eigen::VectorXd out_weight = graph.weights.rowwise().sum();
    // Column-stochastic transposed transition matrix; dangling columns stay zero.
    Eigen::MatrixXd transit = graph.weights.transpose();
    for (Index v = 0; v < n; ++v) {
        if (out_weight(v) > 0.0) transit.col(v) /= out_weight(v);
    }
    const auto dangling = (out_weight.array() <= 0.0).cast<double>().matrix().eval();

    const double d = options.damping;
    const double teleport = (1.0 - d) / static_cast<double>(n);
    Eigen::VectorXd rank = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    double residual = 0.0;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        const double dangling_mass = dangling.dot(rank);
        Eigen::VectorXd next = d * (transit * rank);
        next.array() += d * dangling_mass / static_cast<double>(n) + teleport;
        next /= next.sum();
        residual = (next - rank).lpNorm<1>();
        rank.swap(next);
        if (residual < options.tolerance) return rank;
    }
    throw NumericError("pagerank did not converge after " + std::to_string(options.max_iterations) +
                       " iterations (L1 residual " + std::to_string(residual) + ")");
}

int Partition::community_count() const {
    if (labels.empty()) return 0;
    return *std::max_element(labels.begin(), labels.end()) + 1;
}

Eigen::VectorXd clustering_coefficients(const NetworkGraph& graph) {
    const Eigen::MatrixXd adj = undirected_adjacency(graph);
    const Eigen::VectorXd degree = adj.rowwise().sum();
    // (A^3)_vv counts each triangle through v twice.
    const Eigen::VectorXd closed = (adj * adj).cwiseProduct(adj).rowwise().sum();
    Eigen::VectorXd cc = Eigen::VectorXd::Zero(adj.rows());
    for (Index v = 0; v < adj.rows(); ++v) {
        const double k = degree(v);
        if (k >= 2.0) cc(v) = closed(v) / (k * (k - 1.0));
    }
    return cc;
}

PathSummary path_summary(const NetworkGraph& graph) {
    const Index n = graph.vertex_count();
    PathSummary summary;
    if (n == 0) return summary;

    const Eigen::MatrixXd adj = undirected_adjacency(graph);
    std::vector<std::vector<Index>> neighbors(static_cast<std::size_t>(n));
    for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
            if (adj(u, v) > 0.0) neighbors[static_cast<std::size_t>(u)].push_back(v);
        }
    }

    auto bfs = [&](Index source, std::vector<Index>& dist) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<Index> queue{source};
        dist[static_cast<std::size_t>(source)] = 0;
        while (!queue.empty()) {
            const Index u = queue.front();
            queue.pop_front();
            for (Index v : neighbors[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
    };

    // Largest component; ties go to the one holding the lowest vertex.
    std::vector<Index> component(static_cast<std::size_t>(n), -1);
    std::vector<Index> dist(static_cast<std::size_t>(n));
    Index best_root = 0, best_size = 0;
    for (Index root = 0; root < n; ++root) {
        if (component[static_cast<std::size_t>(root)] >= 0) continue;
        bfs(root, dist);
        Index size = 0;
        for (Index v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] >= 0) {
                component[static_cast<std::size_t>(v)] = root;
                ++size;
            }
        }
        if (size > best_size) {
            best_size = size;
            best_root = root;
        }
    }

    summary.component_size = best_size;
    if (best_size < 2) return summary;

    Index diameter = 0;
    double total = 0.0;
    for (Index u = 0; u < n; ++u) {
        if (component[static_cast<std::size_t>(u)] != best_root) continue;
        bfs(u, dist);
        for (Index v = 0; v < n; ++v) {
            const Index d = dist[static_cast<std::size_t>(v)];
            if (v == u || d < 0) continue;
            diameter = std::max(diameter, d);
            total += static_cast<double>(d);
        }
    }
    summary.diameter = static_cast<double>(diameter);
    summary.avg_path_length = total / (static_cast<double>(best_size) * static_cast<double>(best_size - 1));
    return summary;
}

Eigen::Matrix<double, NetworkStats::kCount, 1> NetworkStats::as_vector() const {
    Eigen::Matrix<double, kCount, 1> v;
    v << avg_degree, avg_weighted_degree, diameter, density, modularity, community_count, avg_clustering,
        avg_path_length;
    return v;
}

const char* const* NetworkStats::names() {
    static const char* const kNames[kCount] = {"avg_degree", "avg_weighted_degree", "diameter",
                                               "density",    "modularity",          "community_count",
                                               "avg_clustering", "avg_path_length"};
    return kNames;
}

NetworkStats stats(const NetworkGraph& graph, std::uint64_t seed) {
    NetworkStats s;
    const Index n = graph.vertex_count();
    if (n == 0) return s;
    const double v = static_cast<double>(n);

    s.avg_degree = undirected_adjacency(graph).sum() / v;
    s.avg_weighted_degree = graph.weights.rowwise().sum().mean();
    s.density = n > 1 ? static_cast<double>(graph.edge_count()) / (v * (v - 1.0)) : 0.0;

    const Partition part = louvain(graph, 1.0, seed);
    s.modularity = part.modularity;
    s.community_count = part.community_count();
    s.avg_clustering = clustering_coefficients(graph).mean();

    const PathSummary paths = path_summary(graph);
    s.diameter = paths.diameter;
    s.avg_path_length = paths.avg_path_length;
    return s;
}

void annotate(NetworkGraph& graph, const AnalysisOptions& options) {
    graph.pagerank = pagerank(graph, options.pagerank);
    Partition part = louvain(graph, options.resolution, options.seed);
    graph.modules = std::move(part.labels);
    graph.modularity = part.modularity;
    graph.clustering = clustering_coefficients(graph);
}

}  // namespace tempograph
