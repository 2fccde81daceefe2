#include "tempograph/classify.hpp"
#include "tempograph/ingest.hpp"
#include "tempograph/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace tempograph;

namespace {

// Two-sided Student-t tail by composite Simpson quadrature of the density over [0, |t|].
double t_tail_quadrature(double t, double nu) {
    const double c = std::exp(std::lgamma((nu + 1) / 2) - std::lgamma(nu / 2)) / std::sqrt(nu * M_PI);
    auto pdf = [&](double x) { return c * std::pow(1 + x * x / nu, -(nu + 1) / 2); };
    const int steps = 20000;
    const double h = std::abs(t) / steps;
    double s = pdf(0) + pdf(std::abs(t));
    for (int i = 1; i < steps; ++i) s += (i % 2 ? 4 : 2) * pdf(i * h);
    return 1.0 - 2.0 * s * h / 3.0;
}

}  // namespace

TEST(Special, StudentTailMatchesQuadrature) {
    for (double nu : {1.0, 2.5, 7.0, 30.0, 200.0}) {
        for (double t : {0.0, 0.3, 1.0, 2.2, 4.0}) {
            EXPECT_NEAR(special::student_t_two_sided_p(t, nu), t_tail_quadrature(t, nu), 1e-9) << nu << " " << t;
        }
    }
}

TEST(Special, IncompleteBetaReference) {
    // scipy.special.betainc(2.5, 1.5, 0.3)
    EXPECT_NEAR(special::incomplete_beta(2.5, 1.5, 0.3), 0.08894372317066562, 1e-13);
    EXPECT_EQ(special::incomplete_beta(2, 3, 0), 0.0);
    EXPECT_EQ(special::incomplete_beta(2, 3, 1), 1.0);
    // I_x(1, 1) = x
    EXPECT_NEAR(special::incomplete_beta(1, 1, 0.37), 0.37, 1e-14);
}

TEST(Welch, MatchesReferenceValues) {
    Eigen::VectorXd a(5), b(6);
    a << 1.2, 2.3, 3.1, 4.8, 2.2;
    b << 3.3, 4.1, 5.9, 6.2, 5.5, 4.9;
    const auto w = welch_t_test(a, b);
    // scipy.stats.ttest_ind(a, b, equal_var=False)
    EXPECT_NEAR(w.t, -3.002221356373844, 1e-12);
    EXPECT_NEAR(w.p_value, 0.01742140906225661, 1e-10);
    EXPECT_TRUE(w.significant);
}

TEST(Welch, DegenerateGroups) {
    Eigen::VectorXd one(1);
    one << 2.0;
    Eigen::VectorXd a = Eigen::VectorXd::Constant(4, 1.0);
    EXPECT_TRUE(welch_t_test(one, a).skipped);
    EXPECT_EQ(welch_t_test(a, a).p_value, 1.0);
    EXPECT_EQ(welch_t_test(a, Eigen::VectorXd::Constant(3, 2.0)).p_value, 0.0);
}

TEST(OneNn, MatchesBruteForceWithEarliestTie) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    const Eigen::MatrixXd train = Eigen::MatrixXd::NullaryExpr(30, 8, [&] { return g(rng); });
    const Eigen::MatrixXd test = Eigen::MatrixXd::NullaryExpr(20, 8, [&] { return g(rng); });
    std::vector<int> ytr(30), yte(20);
    for (int i = 0; i < 30; ++i) ytr[i] = i % 3;
    for (int i = 0; i < 20; ++i) yte[i] = i % 3;
    const auto r = one_nn(train, ytr, test, yte);
    int correct = 0;
    for (Index i = 0; i < 20; ++i) {
        Index best = 0;
        double bd = 1e300;
        for (Index j = 0; j < 30; ++j) {
            double d = 0;
            for (Index c = 0; c < 8; ++c) d += (test(i, c) - train(j, c)) * (test(i, c) - train(j, c));
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        ASSERT_EQ(r.neighbors[i], best);
        correct += ytr[best] == yte[i];
    }
    EXPECT_DOUBLE_EQ(r.accuracy, correct / 20.0);

    Eigen::MatrixXd dup(2, 1);
    dup << 1.0, 1.0;
    Eigen::MatrixXd q(1, 1);
    q << 1.0;
    EXPECT_EQ(one_nn(dup, {5, 6}, q, {6}).predictions[0], 5);
}

TEST(Features, StandardizerFitsOnTrainOnly) {
    Eigen::MatrixXd train(3, 2);
    train << 1, 5, 2, 5, 3, 5;
    const auto s = Standardizer::fit(train);
    EXPECT_DOUBLE_EQ(s.mean(0), 2.0);
    EXPECT_DOUBLE_EQ(s.scale(0), std::sqrt(2.0 / 3.0));
    EXPECT_DOUBLE_EQ(s.scale(1), 1.0);   // constant column is only centred
    Eigen::MatrixXd test(1, 2);
    test << 4, 7;
    const auto z = s.apply(test);
    EXPECT_DOUBLE_EQ(z(0, 0), 2.0 / std::sqrt(2.0 / 3.0));
    EXPECT_DOUBLE_EQ(z(0, 1), 2.0);
}

TEST(Features, CombineConcatenatesScaledStats) {
    Eigen::MatrixXd raw(2, 2), st(2, 1);
    raw << 1, 2, 3, 4;
    st << 0.5, -1;
    const auto c = combine_features(raw, st, 2.0);
    ASSERT_EQ(c.cols(), 3);
    EXPECT_EQ(c(1, 2), -2.0);
    EXPECT_EQ(c(0, 1), 2.0);
}

TEST(Features, RawRowsAreZNormalized) {
    std::vector<TimeSeries> split(2);
    split[0].values = Eigen::VectorXd::LinSpaced(10, 0, 9);
    split[1].values = Eigen::VectorXd::LinSpaced(10, 5, -5);
    const auto x = raw_features(split);
    EXPECT_NEAR(x.row(0).mean(), 0.0, 1e-14);
    EXPECT_NEAR(x.row(1).squaredNorm() / 10, 1.0, 1e-14);
    split[1].values.resize(9);
    EXPECT_THROW(raw_features(split), ArgumentError);
}

TEST(Summary, ByLabelMatchesManualMeans) {
    Eigen::MatrixXd stats(4, NetworkStats::kCount);
    for (Index r = 0; r < 4; ++r) stats.row(r).setConstant(static_cast<double>(r));
    const auto s = summarize_by_label(stats, {2, 1, 2, 1});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].label, 1);
    EXPECT_DOUBLE_EQ(s[0].mean(0), 2.0);
    EXPECT_DOUBLE_EQ(s[1].mean(3), 1.0);
    EXPECT_DOUBLE_EQ(s[1].stddev(0), 1.0);
    EXPECT_EQ(s[0].count, 2);
}

TEST(Summary, GunPointLabelsDiffer) {
    const auto ds = load_ucr_dataset(TEMPOGRAPH_DATA_DIR "/ucr", "GunPoint");
    EncodingConfig cfg;
    cfg.bins = 50;
    const auto s = per_sample_stats(ds.train, cfg);
    ASSERT_EQ(s.rows.size(), ds.train.size());
    ASSERT_EQ(s.by_label.size(), 2u);
    Eigen::MatrixXd m(s.rows.size(), NetworkStats::kCount);
    for (std::size_t i = 0; i < s.rows.size(); ++i) m.row(i) = s.rows[i].as_vector().transpose();
    const auto tests = paired_significance(m, s.labels);
    int significant = 0;
    for (const auto& t : tests) significant += t.significant;
    EXPECT_GE(significant, 1);
}
