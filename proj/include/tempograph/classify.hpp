#pragma once

#include "tempograph/netgraph.hpp"
#include "tempograph/pipeline.hpp"
#include "tempograph/types.hpp"

#include <Eigen/Core>

#include <array>
#include <map>
#include <vector>

namespace tempograph {

enum class FeatureMode { Raw, Combined };

/// One z-normalized series per row.
Eigen::MatrixXd raw_features(const std::vector<TimeSeries>& split);

/// One NetworkStats row per series, in input order.
Eigen::MatrixXd stats_features(const std::vector<TimeSeries>& split, const EncodingConfig& config);

/// Column-wise standardization fitted on the training split only. Columns with zero
/// spread are centred but not scaled.
struct Standardizer {
    Eigen::RowVectorXd mean;
    Eigen::RowVectorXd scale;

    static Standardizer fit(const Eigen::MatrixXd& train);
    Eigen::MatrixXd apply(const Eigen::MatrixXd& features) const;
};

/// raw | alpha * standardized stats.
Eigen::MatrixXd combine_features(const Eigen::MatrixXd& raw, const Eigen::MatrixXd& standardized_stats,
                                 double alpha);

struct NearestNeighborResult {
    std::vector<int> predictions;
    std::vector<Index> neighbors;   // training row chosen for each test row
    double accuracy = 0.0;
};

/// Euclidean 1-NN; ties go to the earliest training row.
NearestNeighborResult one_nn(const Eigen::MatrixXd& train, const std::vector<int>& train_labels,
                             const Eigen::MatrixXd& test, const std::vector<int>& test_labels);

std::vector<int> labels_of(const std::vector<TimeSeries>& split);

/// Per-series statistics of a split plus the per-label aggregate.
struct LabelSummary {
    int label = 0;
    Index count = 0;
    Eigen::Matrix<double, NetworkStats::kCount, 1> mean;
    Eigen::Matrix<double, NetworkStats::kCount, 1> stddev;   // population std
};

struct SampleStats {
    std::vector<NetworkStats> rows;
    std::vector<int> labels;
    std::vector<LabelSummary> by_label;   // ascending label
};

SampleStats per_sample_stats(const std::vector<TimeSeries>& split, const EncodingConfig& config);
std::vector<LabelSummary> summarize_by_label(const Eigen::MatrixXd& stats, const std::vector<int>& labels);

struct WelchTest {
    double t = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
    bool significant = false;
    bool skipped = false;   // a group had fewer than two samples
};

/// Welch's unequal-variance two-sample t test, two-sided.
WelchTest welch_t_test(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double alpha = 0.05);

/// One Welch test per statistic between the two smallest labels present.
std::array<WelchTest, NetworkStats::kCount> paired_significance(const Eigen::MatrixXd& stats,
                                                               const std::vector<int>& labels,
                                                               double alpha = 0.05);

}  // namespace tempograph
