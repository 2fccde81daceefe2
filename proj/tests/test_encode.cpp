#include "oracles.hpp"

#include "tempograph/encode.hpp"
#include "tempograph/ingest.hpp"
#include "tempograph/pipeline.hpp"
#include "tempograph/special.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tempograph;

TEST(Special, ProbitMatchesBisection) {
    for (double p : {1e-10, 1e-4, 0.02, 0.1, 0.3, 0.5, 0.7, 0.975, 1 - 1e-9}) {
        EXPECT_NEAR(special::normal_quantile(p), oracle::probit_bisect(p), 1e-11) << p;
    }
    EXPECT_EQ(special::normal_quantile(0.5), 0.0);
    EXPECT_THROW(special::normal_quantile(0.0), ArgumentError);
    EXPECT_THROW(special::normal_quantile(1.0), ArgumentError);
}

TEST(Binning, GaussianBreakpointsAreNormalQuantiles) {
    const Binner b = make_binner(BinningMode::Gaussian, 4);
    ASSERT_EQ(b.breakpoints.size(), 3u);
    EXPECT_NEAR(b.breakpoints[0], -0.6744897501960817, 1e-12);
    EXPECT_EQ(b.breakpoints[1], 0.0);
    EXPECT_NEAR(b.breakpoints[2], 0.6744897501960817, 1e-12);
}

TEST(Binning, TiesGoToUpperBin) {
    const Binner b = make_binner(BinningMode::Gaussian, 2);
    EXPECT_EQ(b.bin_of(0.0), 1);
    EXPECT_EQ(b.bin_of(1e-300), 2);
    EXPECT_EQ(b.bin_of(-5), 1);
}

TEST(Binning, QuantileModeLinearInterpolation) {
    const std::vector<double> pool{4, 1, 3, 2};
    const Binner b = make_binner(BinningMode::Quantile, 2, pool);
    // sorted 1 2 3 4, position 0.5 * 3 = 1.5
    ASSERT_EQ(b.breakpoints.size(), 1u);
    EXPECT_DOUBLE_EQ(b.breakpoints[0], 2.5);
    EXPECT_THROW(make_binner(BinningMode::Quantile, 4, std::vector<double>{1, 1, 1, 2}), BinningError);
    EXPECT_THROW(make_binner(BinningMode::Gaussian, 1), ArgumentError);
}

TEST(Binning, AgreesWithLinearScan) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int q : {2, 3, 7, 10, 50}) {
        const Binner b = make_binner(BinningMode::Gaussian, q);
        for (int i = 0; i < 500; ++i) {
            const double x = g(rng);
            ASSERT_EQ(b.bin_of(x), oracle::scan_bin(x, b.breakpoints));
        }
    }
}

TEST(Markov, HandComputedMatrix) {
    // 1 2 1 1 2: transitions 1->2, 2->1, 1->1, 1->2
    const BinSequence seq{1, 2, 1, 1, 2};
    const auto mm = markov_matrix(seq, 3);
    EXPECT_DOUBLE_EQ(mm.weights(0, 0), 1.0 / 3);
    EXPECT_DOUBLE_EQ(mm.weights(0, 1), 2.0 / 3);
    EXPECT_DOUBLE_EQ(mm.weights(1, 0), 1.0);
    EXPECT_TRUE(mm.weights.row(2).isZero(0.0));   // bin 3 never visited
    EXPECT_EQ(mm.counts.sum(), 4);
}

TEST(Markov, RejectsOutOfRangeBins) {
    EXPECT_THROW(markov_matrix(BinSequence{1, 4}, 3), ArgumentError);
    EXPECT_THROW(markov_matrix(BinSequence{1}, 3), ArgumentError);
}

TEST(Field, MatchesNaiveReference) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 2 + trial % 7;
        const Index n = 2 + trial % 31;
        const auto seq = oracle::random_bins(rng, n, q);
        const auto f = transition_field(seq, markov_matrix(seq, q));
        ASSERT_LT((f.values - oracle::naive_field(seq, q)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Field, FloatInstantiation) {
    const BinSequence seq{1, 2, 2, 1, 3};
    const auto f = transition_field(seq, markov_matrix<float>(seq, 3));
    const Eigen::MatrixXd ref = oracle::naive_field(seq, 3);
    EXPECT_LT((f.values.cast<double>() - ref).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Blur, AverageMatchesExplicitPatchMeans) {
    std::mt19937_64 rng(2);
    const auto seq = oracle::random_bins(rng, 23, 5);
    const auto f = transition_field(seq, markov_matrix(seq, 5));
    for (Index m : {1, 2, 3, 4, 7, 23}) {
        const auto b = blur(f, m, BlurKernel::average());
        EXPECT_EQ(b.size(), field_side(23, m));
        EXPECT_LT((b.values - oracle::naive_blur(f.values, m, false)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(Blur, GaussianMatchesExplicitWeights) {
    std::mt19937_64 rng(8);
    const auto seq = oracle::random_bins(rng, 30, 6);
    const auto f = transition_field(seq, markov_matrix(seq, 6));
    for (Index m : {2, 4, 7}) {
        for (double sigma : {0.0, 0.7, 3.0}) {
            const auto b = blur(f, m, BlurKernel::gaussian(sigma));
            EXPECT_LT((b.values - oracle::naive_blur(f.values, m, true, sigma)).cwiseAbs().maxCoeff(), 1e-14);
        }
    }
}

TEST(Blur, FusedPathEqualsTwoStep) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = 5 + trial * 3;
        const int q = 2 + trial % 9;
        const Index m = 1 + trial % 6;
        const auto seq = oracle::random_bins(rng, n, q);
        const auto mm = markov_matrix(seq, q);
        const BlurKernel k = trial % 2 ? BlurKernel::average() : BlurKernel::gaussian();
        const auto two = blur(transition_field(seq, mm), m, k);
        const auto fused = blurred_transition_field(seq, mm, m, k);
        ASSERT_EQ(two.size(), fused.size());
        EXPECT_LT((two.values - fused.values).cwiseAbs().maxCoeff(), 1e-13);
        EXPECT_EQ(fused.segment_len, m);
        EXPECT_EQ(fused.source_len, n);
    }
}

TEST(Blur, AverageConservesMeanWhenDivisible) {
    std::mt19937_64 rng(21);
    for (Index m : {2, 3, 4, 8}) {
        const auto seq = oracle::random_bins(rng, m * 6, 5);
        const auto f = transition_field(seq, markov_matrix(seq, 5));
        EXPECT_NEAR(blur(f, m, BlurKernel::average()).values.mean(), f.values.mean(), 1e-12);
    }
}

TEST(Blur, RejectsZeroPatch) {
    const BinSequence seq{1, 2, 1};
    const auto f = transition_field(seq, markov_matrix(seq, 2));
    EXPECT_THROW(blur(f, 0, BlurKernel::average()), ArgumentError);
}

TEST(Pipeline, SizeContract96To48) {
    TimeSeries s;
    s.values = Eigen::VectorXd::LinSpaced(96, 0, 6).array().sin();
    EncodingConfig cfg;
    cfg.target_size = 48;
    const auto e = encode_series(s, cfg);
    EXPECT_EQ(e.field.size(), 48);
    EXPECT_EQ(e.graph.vertex_count(), 48);
    EXPECT_EQ(cfg.patch_size(96), 2);
    cfg.target_size = 0;
    cfg.segment_len = 1;
    EXPECT_EQ(encode_series(s, cfg).field.size(), 96);
}

TEST(Pipeline, RejectsBadConfig) {
    EncodingConfig cfg;
    cfg.bins = 1;
    EXPECT_THROW(cfg.validate(), ArgumentError);
    cfg = {};
    cfg.segment_len = 0;
    EXPECT_THROW(cfg.validate(), ArgumentError);
    cfg = {};
    cfg.threshold = -1;
    EXPECT_THROW(cfg.validate(), ArgumentError);
}

TEST(Pipeline, QuantileBinningOnConstantSeriesFails) {
    TimeSeries s;
    s.values = Eigen::VectorXd::Constant(50, 2.0);
    EncodingConfig cfg;
    cfg.binning = BinningMode::Quantile;
    EXPECT_THROW(encode_series(s, cfg), BinningError);
}

// Property: every row of W sums to one or zero, and every field value lies in [0,1].
TEST(Property, StochasticRowsAndBoundedField) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 2 + static_cast<int>(rng() % 12);
        const Index n = 2 + static_cast<Index>(rng() % 120);
        const auto seq = oracle::random_bins(rng, n, q);
        const auto mm = markov_matrix(seq, q);
        for (Index r = 0; r < q; ++r) {
            const double s = mm.weights.row(r).sum();
            ASSERT_TRUE(std::abs(s - 1) < 1e-12 || s == 0.0);
        }
        const auto f = blurred_transition_field(seq, mm, 1 + static_cast<Index>(rng() % 9), BlurKernel::gaussian());
        ASSERT_GE(f.values.minCoeff(), 0.0);
        ASSERT_LE(f.values.maxCoeff(), 1.0 + 1e-12);
    }
}
