#include "tempograph/service.hpp"

#include "tempograph/anomaly.hpp"
#include "tempograph/mapping.hpp"

#include <httplib.h>

#include <charconv>
#include <mutex>
#include <random>
#include <sstream>

namespace tempograph {

namespace {

std::int64_t now_seconds() {
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

HttpResponse error(int status, const std::string& message) {
    return {status, Json{{"error", message}}.dump()};
}

HttpResponse ok(const Json& body) {
    return {200, body.dump()};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// "3,4,10" -> {3, 4, 10}; empty text -> {}.
std::set<Index> parse_vertex_list(const std::string& text) {
    std::set<Index> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string token = text.substr(pos, next - pos);
        Index v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw ArgumentError("bad vertex '" + token + "'");
        }
        out.insert(v);
        pos = next + 1;
    }
    return out;
}

}  // namespace

Service::Service(ServiceOptions options) : options_(std::move(options)), salt_(std::random_device{}()) {
    salt_ = (salt_ << 32) ^ std::random_device{}();
}

std::string Service::new_id() {
    std::ostringstream id;
    id << std::hex << splitmix64(salt_ ^ counter_.fetch_add(1));
    return id.str();
}

std::shared_ptr<const Session> Service::find(const std::string& id) {
    std::shared_lock lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    it->second.last_access->store(now_seconds());
    return it->second.session;
}

std::size_t Service::session_count() const {
    std::shared_lock lock(mutex_);
    return sessions_.size();
}

std::size_t Service::expire_idle() {
    const std::int64_t cutoff = now_seconds() - options_.idle_timeout.count();
    std::unique_lock lock(mutex_);
    return std::erase_if(sessions_, [cutoff](const auto& kv) { return kv.second.last_access->load() < cutoff; });
}

HttpResponse Service::create_session(const std::string& body) {
    expire_idle();
    auto session = std::make_shared<Session>();
    try {
        const Json doc = Json::parse(body);
        if (!doc.is_object()) return error(400, "payload must be a JSON object");
        if (auto it = doc.find("config"); it != doc.end()) apply_json(session->config, *it);
        session->config.validate();

        if (auto it = doc.find("series"); it != doc.end()) {
            const auto values = it->get<std::vector<double>>();
            session->raw.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
        } else if (auto gen = doc.find("generator"); gen != doc.end()) {
            GeneratedSeries g = generate(*gen);
            session->raw = std::move(g.series);
            session->ground_truth = std::move(g.ground_truth);
        } else {
            return error(400, "payload needs 'series' or 'generator'");
        }
        session->raw.name = doc.value("name", session->raw.name.empty() ? std::string("series") : session->raw.name);
        if (session->raw.size() > options_.max_series_length) {
            return error(413, "series length " + std::to_string(session->raw.size()) + " exceeds the limit of " +
                                  std::to_string(options_.max_series_length));
        }
        session->encoding = encode_series(session->raw, session->config);
        session->stats = stats(session->encoding.graph, session->config.seed);
        session->graph_body = graph_document(session->encoding.graph, session->stats);
    } catch (const Json::exception& e) {
        return error(400, e.what());
    } catch (const ArgumentError& e) {
        return error(400, e.what());
    } catch (const BinningError& e) {
        return error(400, e.what());
    } catch (const NumericError& e) {
        return error(422, e.what());
    }

    session->id = new_id();
    const std::string id = session->id;
    std::string response = "{\"session\":" + Json(id).dump() + ",\"graph\":" + session->graph_body + "}";
    {
        std::unique_lock lock(mutex_);
        sessions_[id] = Entry{std::move(session), std::make_shared<std::atomic<std::int64_t>>(now_seconds())};
    }
    return {200, std::move(response)};
}

HttpResponse Service::get_graph(const std::string& id) {
    const auto s = find(id);
    if (!s) return error(404, "unknown session");
    return {200, s->graph_body};
}

HttpResponse Service::get_stats(const std::string& id) {
    const auto s = find(id);
    if (!s) return error(404, "unknown session");
    return ok({{"stats", to_json(s->stats)}, {"config", to_json(s->config)}});
}

HttpResponse Service::get_shapelets(const std::string& id) {
    const auto s = find(id);
    if (!s) return error(404, "unknown session");
    return ok({{"groups", shapelets_to_json(community_shapelets(s->encoding.graph, s->raw))}});
}

HttpResponse Service::get_spans(const std::string& id, const std::optional<std::string>& vertices) {
    const auto s = find(id);
    if (!s) return error(404, "unknown session");
    try {
        const std::set<Index> selection = parse_vertex_list(vertices.value_or(""));
        const std::vector<Span> spans = selection_to_spans(s->encoding.graph, selection);
        return ok({{"spans", to_json(spans)},
                   {"shapelets", shapelets_to_json(spans_to_shapelets(s->raw, spans, ShapeletOrigin::Selection))}});
    } catch (const ArgumentError& e) {
        return error(400, e.what());
    }
}

HttpResponse Service::post_anomaly(const std::string& id, const std::string& body) {
    const auto s = find(id);
    if (!s) return error(404, "unknown session");
    try {
        const Json doc = body.empty() ? Json::object() : Json::parse(body);
        if (!doc.is_object()) return error(400, "payload must be a JSON object");
        const NetworkGraph& graph = s->encoding.graph;
        const Index k = default_k(graph.vertex_count());
        const Index k_s = doc.value("ks", k);
        AnomalyReport report;
        if (auto it = doc.find("H"); it != doc.end() && !it->is_null()) {
            const auto selected = it->get<std::vector<Index>>();
            report = detect_with_selection(graph, {selected.begin(), selected.end()}, k_s);
        } else {
            report = detect(graph, doc.value("kh", k), k_s);
        }
        Json out = anomaly_to_json(report);
        if (!s->ground_truth.empty()) out["ground_truth"] = to_json(s->ground_truth);
        return ok(out);
    } catch (const Json::exception& e) {
        return error(400, e.what());
    } catch (const ArgumentError& e) {
        return error(400, e.what());
    }
}

void Service::mount(httplib::Server& server, const std::string& static_dir) {
    const std::string origin = options_.cors_origin;
    server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    auto send = [](httplib::Response& res, const HttpResponse& r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };

    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Post("/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, create_session(req.body));
    });
    server.Get(R"(/sessions/([^/]+)/graph)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, get_graph(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/stats)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, get_stats(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/shapelets)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, get_shapelets(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/spans)", [this, send](const httplib::Request& req, httplib::Response& res) {
        std::optional<std::string> vertices;
        if (req.has_param("vertices")) vertices = req.get_param_value("vertices");
        send(res, get_spans(req.matches[1], vertices));
    });
    server.Post(R"(/sessions/([^/]+)/anomaly)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, post_anomaly(req.matches[1], req.body));
    });
    if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace tempograph
