#include "tempograph/service.hpp"

#include <httplib.h>
#include <gtest/gtest.h>

#include <thread>

using namespace tempograph;

namespace {

const char* kSinePayload = R"({"generator": {"type": "compound", "length": 400, "rare": "fine_feature",
                                "intervals": [[200, 260]]},
                               "config": {"q": 8, "size": 80}})";

std::string create(Service& svc, const std::string& body = kSinePayload) {
    const auto r = svc.create_session(body);
    EXPECT_EQ(r.status, 200) << r.body;
    return Json::parse(r.body)["session"].get<std::string>();
}

}  // namespace

TEST(Service, CreateReturnsCanonicalGraph) {
    Service svc;
    const auto r = svc.create_session(kSinePayload);
    ASSERT_EQ(r.status, 200);
    const auto doc = Json::parse(r.body);
    const std::string id = doc["session"];
    EXPECT_EQ(doc["graph"]["vertex_count"], 80);
    const auto g = svc.get_graph(id);
    EXPECT_EQ(g.status, 200);
    EXPECT_EQ(Json::parse(g.body), doc["graph"]);
    EXPECT_EQ(svc.session_count(), 1u);
}

TEST(Service, RawSeriesPayload) {
    Service svc;
    Json body{{"series", std::vector<double>{0, 1, 2, 1, 0, -1, -2, -1, 0, 1}}, {"config", {{"q", 3}}}};
    const auto id = create(svc, body.dump());
    const auto st = Json::parse(svc.get_stats(id).body);
    EXPECT_EQ(st["config"]["q"], 3);
    EXPECT_TRUE(st["stats"].contains("avg_degree"));
}

TEST(Service, ErrorStatuses) {
    ServiceOptions opts;
    opts.max_series_length = 100;
    Service svc(opts);
    EXPECT_EQ(svc.create_session("{").status, 400);
    EXPECT_EQ(svc.create_session("[]").status, 400);
    EXPECT_EQ(svc.create_session("{}").status, 400);
    EXPECT_EQ(svc.create_session(R"({"series": [1]})").status, 400);
    EXPECT_EQ(svc.create_session(R"({"series": [1, 2, 3], "config": {"q": 1}})").status, 400);
    EXPECT_EQ(svc.create_session(R"({"series": [1, 2, 3], "config": {"binning": "quantile", "q": 5}})").status, 400);
    EXPECT_EQ(svc.create_session(kSinePayload).status, 413);
    EXPECT_EQ(svc.get_graph("nope").status, 404);
    EXPECT_EQ(svc.get_stats("nope").status, 404);
    EXPECT_EQ(svc.get_shapelets("nope").status, 404);
    EXPECT_EQ(svc.get_spans("nope", std::nullopt).status, 404);
    EXPECT_EQ(svc.post_anomaly("nope", "").status, 404);
    EXPECT_EQ(svc.session_count(), 0u);
}

TEST(Service, ShapeletsAndSpans) {
    Service svc;
    const auto id = create(svc);
    const auto sh = Json::parse(svc.get_shapelets(id).body);
    ASSERT_FALSE(sh["groups"].empty());
    const auto spans = Json::parse(svc.get_spans(id, "0,1,5").body);
    EXPECT_EQ(spans["spans"], Json::parse("[[0, 10], [25, 30]]"));
    EXPECT_EQ(spans["shapelets"].size(), 2u);
    EXPECT_EQ(svc.get_spans(id, "0,x").status, 400);
    EXPECT_EQ(svc.get_spans(id, "999").status, 400);
    EXPECT_EQ(Json::parse(svc.get_spans(id, std::nullopt).body)["spans"].size(), 0u);
}

TEST(Service, AnomalyDefaultAndHumanSelection) {
    Service svc;
    const auto id = create(svc);
    const auto r = Json::parse(svc.post_anomaly(id, "").body);
    EXPECT_EQ(r["H"].size(), 4u);   // default k for 80 vertices
    EXPECT_EQ(r["ground_truth"], Json::parse("[[200, 260]]"));
    EXPECT_FALSE(r["human_selection"].get<bool>());

    const auto h = Json::parse(svc.post_anomaly(id, R"({"H": [41, 42], "ks": 1})").body);
    EXPECT_TRUE(h["human_selection"].get<bool>());
    EXPECT_EQ(h["H"], Json::parse("[41, 42]"));
    EXPECT_EQ(h["S"].size(), 1u);

    const auto big = Json::parse(svc.post_anomaly(id, R"({"kh": 500})").body);
    EXPECT_TRUE(big["clamped"].get<bool>());
    EXPECT_EQ(svc.post_anomaly(id, R"({"H": [80]})").status, 400);
    EXPECT_EQ(svc.post_anomaly(id, "[").status, 400);
}

TEST(Service, IdleSessionsExpire) {
    ServiceOptions opts;
    opts.idle_timeout = std::chrono::seconds(-1);
    Service svc(opts);
    create(svc);
    EXPECT_EQ(svc.expire_idle(), 1u);
    EXPECT_EQ(svc.session_count(), 0u);
}

TEST(Service, ConcurrentReadsSeeOneSnapshot) {
    Service svc;
    const auto id = create(svc);
    const std::string expected = svc.get_graph(id).body;
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&] {
            for (int i = 0; i < 20; ++i) {
                if (svc.get_graph(id).body != expected) ++mismatches;
                svc.post_anomaly(id, "");
            }
        });
    }
    for (int t = 0; t < 4; ++t) pool.emplace_back([&] { create(svc); });
    for (auto& th : pool) th.join();
    EXPECT_EQ(mismatches.load(), 0);
    EXPECT_EQ(svc.session_count(), 5u);
}

TEST(Service, LiveHttpRoundTrip) {
    Service svc;
    httplib::Server server;
    svc.mount(server);
    const int port = server.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/sessions", kSinePayload, "application/json");
    ASSERT_TRUE(created);
    EXPECT_EQ(created->status, 200);
    EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "*");
    const std::string id = Json::parse(created->body)["session"];

    auto graph = client.Get("/sessions/" + id + "/graph");
    ASSERT_TRUE(graph);
    EXPECT_EQ(graph->body, svc.get_graph(id).body);
    auto spans = client.Get("/sessions/" + id + "/spans?vertices=2,3");
    ASSERT_TRUE(spans);
    EXPECT_EQ(Json::parse(spans->body)["spans"], Json::parse("[[10, 20]]"));
    auto anomaly = client.Post("/sessions/" + id + "/anomaly", R"({"H": [1]})", "application/json");
    ASSERT_TRUE(anomaly);
    EXPECT_EQ(anomaly->status, 200);
    auto missing = client.Get("/sessions/unknown/stats");
    ASSERT_TRUE(missing);
    EXPECT_EQ(missing->status, 404);
    auto preflight = client.Options("/sessions");
    ASSERT_TRUE(preflight);
    EXPECT_EQ(preflight->status, 204);

    server.stop();
    worker.join();
}
