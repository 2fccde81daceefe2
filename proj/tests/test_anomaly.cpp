#include "oracles.hpp"

#include "tempograph/anomaly.hpp"
#include "tempograph/ingest.hpp"
#include "tempograph/mapping.hpp"
#include "tempograph/pipeline.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tempograph;

namespace {

// Triangles {0,1,2} and {4,5,6} joined through the bridge vertex 3.
NetworkGraph bridged_triangles() {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(7, 7);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}}) {
        w(a, b) = 1.0;
        w(b, a) = 1.0;
    }
    auto g = build_graph_from(w, 10, 70, 0.0);
    annotate(g);
    return g;
}

}  // namespace

TEST(Anomaly, DefaultK) {
    EXPECT_EQ(default_k(1), 1);
    EXPECT_EQ(default_k(20), 1);
    EXPECT_EQ(default_k(21), 2);
    EXPECT_EQ(default_k(200), 10);
}

TEST(Anomaly, BridgeVertexIsBothIsolatedAndUnclustered) {
    const auto g = bridged_triangles();
    ASSERT_EQ(g.modules[0], g.modules[2]);
    ASSERT_NE(g.modules[0], g.modules[5]);
    const auto scores = isolation_scores(g);
    // The bridge has one edge inside its module and one outside.
    EXPECT_DOUBLE_EQ(scores(3), 0.5);
    EXPECT_DOUBLE_EQ(scores(0), 0.0);

    const auto r = detect(g, 1, 1);
    EXPECT_EQ(r.isolated, std::set<Index>{3});
    EXPECT_EQ(r.low_clustering, std::set<Index>{3});
    EXPECT_EQ(r.spans, (std::vector<Span>{{30, 40}}));
    EXPECT_FALSE(r.clamped);
}

TEST(Anomaly, ScoresMatchDirectSum) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = build_graph_from(oracle::random_weights(rng, 12, 0.3), 1, 12, 0.0);
        annotate(g);
        const auto scores = isolation_scores(g);
        for (Index v = 0; v < 12; ++v) {
            double out = 0, all = 0;
            for (Index u = 0; u < 12; ++u) {
                const double w = g.weights(v, u) + g.weights(u, v);
                all += w;
                if (g.modules[u] != g.modules[v]) out += w;
            }
            ASSERT_DOUBLE_EQ(scores(v), all > 0 ? out / all : 1.0);
        }
    }
}

TEST(Anomaly, ClampsOversizedK) {
    const auto g = bridged_triangles();
    const auto r = detect(g, 50, 2);
    EXPECT_TRUE(r.clamped);
    EXPECT_EQ(r.isolated.size(), 7u);
    EXPECT_EQ(r.spans, (std::vector<Span>{{0, 70}}));
    EXPECT_THROW(detect(g, -1, 1), ArgumentError);
}

TEST(Anomaly, TiesGoToLowerIndex) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
    auto g = build_graph_from(w, 1, 4, 0.0);
    annotate(g);
    const auto r = detect(g, 2, 2);
    EXPECT_EQ(r.isolated, (std::set<Index>{0, 1}));
    EXPECT_EQ(r.low_clustering, (std::set<Index>{0, 1}));
}

TEST(Anomaly, HumanSelectionReplacesH) {
    const auto g = bridged_triangles();
    const auto r = detect_with_selection(g, {5, 6}, 1);
    EXPECT_TRUE(r.human_selection);
    EXPECT_EQ(r.isolated, (std::set<Index>{5, 6}));
    EXPECT_EQ(r.candidates, (std::set<Index>{3, 5, 6}));
    EXPECT_THROW(detect_with_selection(g, {7}, 1), ArgumentError);
}

TEST(Anomaly, CoveredSamples) {
    EXPECT_EQ(covered_samples({{0, 10}, {20, 30}}, {{5, 25}}), 10);
    EXPECT_EQ(covered_samples({{0, 10}, {5, 12}}, {{0, 100}}), 12);
    EXPECT_EQ(covered_samples({}, {{0, 100}}), 0);
}

// Property: the union's coverage never drops below either part's coverage.
TEST(Property, UnionCoversAtLeastIntersection) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CompoundSpec spec;
        spec.length = 400;
        spec.intervals = {{150 + static_cast<Index>(seed) * 7, 190 + static_cast<Index>(seed) * 7}};
        spec.rare = static_cast<RareShape>(seed % 3);
        spec.noise = 0.05;
        spec.seed = seed;
        const auto gen = gen_compound(spec);
        EncodingConfig cfg;
        cfg.target_size = 100;
        const auto e = encode_series(gen.series, cfg);
        const Index k = default_k(e.graph.vertex_count());
        const auto r = detect(e.graph, k, k);
        std::set<Index> both;
        for (Index v : r.isolated)
            if (r.low_clustering.count(v)) both.insert(v);
        const Index u = covered_samples(r.spans, gen.ground_truth);
        ASSERT_GE(u, covered_samples(selection_to_spans(e.graph, both), gen.ground_truth));
        ASSERT_GE(u, covered_samples(selection_to_spans(e.graph, r.isolated), gen.ground_truth));
        ASSERT_GE(u, covered_samples(selection_to_spans(e.graph, r.low_clustering), gen.ground_truth));
    }
}
