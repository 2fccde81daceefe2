#include "tempograph/classify.hpp"

#include "tempograph/ingest.hpp"
#include "tempograph/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace tempograph {

Eigen::MatrixXd raw_features(const std::vector<TimeSeries>& split) {
    if (split.empty()) return {};
    const Index n = split.front().size();
    Eigen::MatrixXd out(static_cast<Index>(split.size()), n);
    for (std::size_t i = 0; i < split.size(); ++i) {
        if (split[i].size() != n) throw ArgumentError("raw_features: series lengths differ");
        out.row(static_cast<Index>(i)) = znormalize(split[i].values).transpose();
    }
    return out;
}

Eigen::MatrixXd stats_features(const std::vector<TimeSeries>& split, const EncodingConfig& config) {
    Eigen::MatrixXd out(static_cast<Index>(split.size()), NetworkStats::kCount);
    for (std::size_t i = 0; i < split.size(); ++i) {
        const Encoding enc = encode_series(split[i], config, false);
        out.row(static_cast<Index>(i)) = stats(enc.graph, config.seed).as_vector().transpose();
    }
    return out;
}

Standardizer Standardizer::fit(const Eigen::MatrixXd& train) {
    if (train.rows() == 0) throw ArgumentError("Standardizer::fit: empty training matrix");
    Standardizer s;
    s.mean = train.colwise().mean();
    const Eigen::RowVectorXd var =
        (train.rowwise() - s.mean).array().square().colwise().sum() / static_cast<double>(train.rows());
    s.scale = var.array().sqrt();
    for (Index c = 0; c < s.scale.size(); ++c) {
        if (!(s.scale(c) > 1e-12)) s.scale(c) = 1.0;
    }
    return s;
}

Eigen::MatrixXd Standardizer::apply(const Eigen::MatrixXd& features) const {
    if (features.cols() != mean.size()) throw ArgumentError("Standardizer::apply: column count mismatch");
    return (features.rowwise() - mean).array().rowwise() / scale.array();
}

Eigen::MatrixXd combine_features(const Eigen::MatrixXd& raw, const Eigen::MatrixXd& standardized_stats,
                                 double alpha) {
    if (raw.rows() != standardized_stats.rows()) throw ArgumentError("combine_features: row count mismatch");
    Eigen::MatrixXd out(raw.rows(), raw.cols() + standardized_stats.cols());
    out << raw, alpha * standardized_stats;
    return out;
}

std::vector<int> labels_of(const std::vector<TimeSeries>& split) {
    std::vector<int> labels;
    labels.reserve(split.size());
    for (const auto& s : split) {
        if (!s.label) throw ArgumentError("series '" + s.name + "' has no label");
        labels.push_back(*s.label);
    }
    return labels;
}

NearestNeighborResult one_nn(const Eigen::MatrixXd& train, const std::vector<int>& train_labels,
                             const Eigen::MatrixXd& test, const std::vector<int>& test_labels) {
    if (train.rows() == 0 || test.rows() == 0) throw ArgumentError("one_nn: empty split");
    if (train.cols() != test.cols()) throw ArgumentError("one_nn: feature dimension mismatch");
    if (static_cast<Index>(train_labels.size()) != train.rows() ||
        static_cast<Index>(test_labels.size()) != test.rows()) {
        throw ArgumentError("one_nn: label count mismatch");
    }

    NearestNeighborResult result;
    result.predictions.resize(static_cast<std::size_t>(test.rows()));
    result.neighbors.resize(static_cast<std::size_t>(test.rows()));
    Index correct = 0;
    for (Index i = 0; i < test.rows(); ++i) {
        const Eigen::VectorXd dist = (train.rowwise() - test.row(i)).rowwise().squaredNorm();
        Index best = 0;
        for (Index j = 1; j < dist.size(); ++j) {
            if (dist(j) < dist(best)) best = j;
        }
        const int predicted = train_labels[static_cast<std::size_t>(best)];
        result.neighbors[static_cast<std::size_t>(i)] = best;
        result.predictions[static_cast<std::size_t>(i)] = predicted;
        if (predicted == test_labels[static_cast<std::size_t>(i)]) ++correct;
    }
    result.accuracy = static_cast<double>(correct) / static_cast<double>(test.rows());
    return result;
}

std::vector<LabelSummary> summarize_by_label(const Eigen::MatrixXd& stats, const std::vector<int>& labels) {
    std::map<int, std::vector<Index>> rows;
    for (std::size_t i = 0; i < labels.size(); ++i) rows[labels[i]].push_back(static_cast<Index>(i));
    std::vector<LabelSummary> out;
    for (const auto& [label, idx] : rows) {
        const Eigen::MatrixXd block = stats(idx, Eigen::all);
        LabelSummary s;
        s.label = label;
        s.count = static_cast<Index>(idx.size());
        s.mean = block.colwise().mean().transpose();
        s.stddev = ((block.rowwise() - s.mean.transpose()).array().square().colwise().sum() /
                    static_cast<double>(idx.size()))
                       .sqrt()
                       .transpose();
        out.push_back(s);
    }
    return out;
}

SampleStats per_sample_stats(const std::vector<TimeSeries>& split, const EncodingConfig& config) {
    SampleStats out;
    out.labels = labels_of(split);
    const Eigen::MatrixXd matrix = stats_features(split, config);
    out.rows.reserve(split.size());
    for (Index i = 0; i < matrix.rows(); ++i) {
        NetworkStats s;
        s.avg_degree = matrix(i, 0);
        s.avg_weighted_degree = matrix(i, 1);
        s.diameter = matrix(i, 2);
        s.density = matrix(i, 3);
        s.modularity = matrix(i, 4);
        s.community_count = matrix(i, 5);
        s.avg_clustering = matrix(i, 6);
        s.avg_path_length = matrix(i, 7);
        out.rows.push_back(s);
    }
    out.by_label = summarize_by_label(matrix, out.labels);
    return out;
}

WelchTest welch_t_test(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double alpha) {
    WelchTest w;
    if (a.size() < 2 || b.size() < 2) {
        w.skipped = true;
        w.p_value = std::numeric_limits<double>::quiet_NaN();
        return w;
    }
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = a.mean();
    const double mb = b.mean();
    const double va = (a.array() - ma).square().sum() / (na - 1.0);
    const double vb = (b.array() - mb).square().sum() / (nb - 1.0);
    const double sa = va / na;
    const double sb = vb / nb;
    const double se2 = sa + sb;
    if (se2 <= 0.0) {
        w.dof = na + nb - 2.0;
        w.t = ma == mb ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), ma - mb);
        w.p_value = ma == mb ? 1.0 : 0.0;
    } else {
        w.t = (ma - mb) / std::sqrt(se2);
        w.dof = se2 * se2 / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
        w.p_value = special::student_t_two_sided_p(w.t, w.dof);
    }
    w.significant = w.p_value < alpha;
    return w;
}

std::array<WelchTest, NetworkStats::kCount> paired_significance(const Eigen::MatrixXd& stats,
                                                               const std::vector<int>& labels, double alpha) {
    if (static_cast<Index>(labels.size()) != stats.rows()) {
        throw ArgumentError("paired_significance: label count mismatch");
    }
    std::map<int, std::vector<Index>> rows;
    for (std::size_t i = 0; i < labels.size(); ++i) rows[labels[i]].push_back(static_cast<Index>(i));

    std::array<WelchTest, NetworkStats::kCount> out{};
    if (rows.size() < 2) {
        for (auto& w : out) {
            w.skipped = true;
            w.p_value = std::numeric_limits<double>::quiet_NaN();
        }
        return out;
    }
    const auto& first = rows.begin()->second;
    const auto& second = std::next(rows.begin())->second;
    for (int c = 0; c < NetworkStats::kCount; ++c) {
        const Eigen::VectorXd a = stats(first, c);
        const Eigen::VectorXd b = stats(second, c);
        out[static_cast<std::size_t>(c)] = welch_t_test(a, b, alpha);
    }
    return out;
}

}  // namespace tempograph
