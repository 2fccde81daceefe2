#include "tempograph/netgraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tempograph {

namespace {

constexpr double kGainEpsilon = 1e-13;

std::vector<int> canonical_labels(const std::vector<int>& raw) {
    std::vector<int> remap(raw.size(), -1);
    std::vector<int> out(raw.size());
    int next = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto& slot = remap[static_cast<std::size_t>(raw[i])];
        if (slot < 0) slot = next++;
        out[i] = slot;
    }
    return out;
}

std::vector<Index> visit_order(Index n, std::mt19937_64& rng) {
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    for (Index i = n - 1; i > 0; --i) {
        const auto j = static_cast<Index>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    return order;
}

// One round of local moves on a graph whose total weight is normalized to 1.
// Returns true if any vertex changed community.
bool local_moves(const Eigen::MatrixXd& adj, double resolution, std::mt19937_64& rng, std::vector<int>& comm) {
    const Index n = adj.rows();
    const Eigen::VectorXd degree = adj.rowwise().sum();
    Eigen::VectorXd tot = degree;
    comm.resize(static_cast<std::size_t>(n));
    std::iota(comm.begin(), comm.end(), 0);

    const std::vector<Index> order = visit_order(n, rng);
    Eigen::VectorXd link = Eigen::VectorXd::Zero(n);
    std::vector<int> touched;
    touched.reserve(static_cast<std::size_t>(n));

    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (Index i : order) {
            const int current = comm[static_cast<std::size_t>(i)];
            const double k_i = degree(i);
            touched.clear();
            for (Index j = 0; j < n; ++j) {
                if (j == i || adj(i, j) <= 0.0) continue;
                const int c = comm[static_cast<std::size_t>(j)];
                if (link(c) == 0.0) touched.push_back(c);
                link(c) += adj(i, j);
            }

            tot(current) -= k_i;
            int best = current;
            double best_gain = link(current) - resolution * tot(current) * k_i;
            for (int c : touched) {
                const double gain = link(c) - resolution * tot(c) * k_i;
                if (gain > best_gain + kGainEpsilon) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot(best) += k_i;
            for (int c : touched) link(c) = 0.0;
            link(current) = 0.0;

            if (best != current) {
                comm[static_cast<std::size_t>(i)] = best;
                moved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

}  // namespace

double modularity(const Eigen::MatrixXd& w, const std::vector<int>& labels, double resolution) {
    if (static_cast<Index>(labels.size()) != w.rows()) throw ArgumentError("modularity: label count mismatch");
    const double total = w.sum();
    if (total <= 0.0) return 0.0;
    const int communities = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    Eigen::VectorXd internal = Eigen::VectorXd::Zero(communities);
    Eigen::VectorXd tot = Eigen::VectorXd::Zero(communities);
    const Eigen::VectorXd degree = w.rowwise().sum();
    for (Index i = 0; i < w.rows(); ++i) {
        const int ci = labels[static_cast<std::size_t>(i)];
        tot(ci) += degree(i);
        for (Index j = 0; j < w.cols(); ++j) {
            if (labels[static_cast<std::size_t>(j)] == ci) internal(ci) += w(i, j);
        }
    }
    return internal.sum() / total - resolution * (tot / total).squaredNorm();
}

Partition louvain_symmetric(const Eigen::MatrixXd& w, double resolution, std::uint64_t seed) {
    const Index n = w.rows();
    Partition result;
    result.labels.resize(static_cast<std::size_t>(n));
    std::iota(result.labels.begin(), result.labels.end(), 0);
    const double total = w.sum();
    if (n == 0 || total <= 0.0) return result;

    std::mt19937_64 rng(seed);
    Eigen::MatrixXd level = w / total;
    std::vector<int> membership = result.labels;   // original vertex -> current super-vertex
    std::vector<int> comm;
    while (local_moves(level, resolution, rng, comm)) {
        const std::vector<int> labels = canonical_labels(comm);
        const int count = *std::max_element(labels.begin(), labels.end()) + 1;
        Eigen::MatrixXd assign = Eigen::MatrixXd::Zero(level.rows(), count);
        for (Index i = 0; i < level.rows(); ++i) assign(i, labels[static_cast<std::size_t>(i)]) = 1.0;
        for (auto& m : membership) m = labels[static_cast<std::size_t>(m)];
        if (count == level.rows()) break;
        level = assign.transpose() * level * assign;
        if (count == 1) break;
    }

    result.labels = canonical_labels(membership);
    result.modularity = modularity(w, result.labels, resolution);

    const std::vector<int> single(static_cast<std::size_t>(n), 0);
    const double trivial = modularity(w, single, resolution);
    if (trivial > result.modularity) {
        result.labels = single;
        result.modularity = trivial;
    }
    return result;
}

Partition louvain(const NetworkGraph& graph, double resolution, std::uint64_t seed) {
    return louvain_symmetric(symmetrized_weights(graph), resolution, seed);
}

}  // namespace tempograph
