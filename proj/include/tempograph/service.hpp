#pragma once

#include "tempograph/graph_export.hpp"
#include "tempograph/pipeline.hpp"
#include "tempograph/run_config.hpp"

#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace tempograph {

/// Immutable snapshot of one encoded series.
struct Session {
    std::string id;
    Encoding encoding;
    TimeSeries raw;                 // series as submitted
    EncodingConfig config;
    NetworkStats stats;
    std::string graph_body;         // canonical graph document
    std::vector<Span> ground_truth; // generator sessions only
};

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

struct ServiceOptions {
    Index max_series_length = 4096;
    std::chrono::seconds idle_timeout{1800};
    std::string cors_origin = "*";
};

/// Session registry plus the endpoint handlers. Handlers are plain functions of their
/// inputs so they can be driven without a socket.
class Service {
public:
    explicit Service(ServiceOptions options = {});

    HttpResponse create_session(const std::string& body);
    HttpResponse get_graph(const std::string& id);
    HttpResponse get_stats(const std::string& id);
    HttpResponse get_shapelets(const std::string& id);
    HttpResponse get_spans(const std::string& id, const std::optional<std::string>& vertices);
    HttpResponse post_anomaly(const std::string& id, const std::string& body);

    std::size_t session_count() const;
    /// Drops sessions idle for longer than the configured timeout.
    std::size_t expire_idle();

    /// Registers the routes on an httplib server.
    void mount(httplib::Server& server, const std::string& static_dir = {});

private:
    struct Entry {
        std::shared_ptr<const Session> session;
        std::shared_ptr<std::atomic<std::int64_t>> last_access;
    };

    std::shared_ptr<const Session> find(const std::string& id);
    std::string new_id();

    ServiceOptions options_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, Entry> sessions_;
    std::atomic<std::uint64_t> counter_{0};
    std::uint64_t salt_;
};

}  // namespace tempograph
