#include "tempograph/graph_export.hpp"

#include <ostream>

namespace tempograph {

Json to_json(const NetworkStats& stats) {
    Json out = Json::object();
    const auto values = stats.as_vector();
    for (int i = 0; i < NetworkStats::kCount; ++i) out[NetworkStats::names()[i]] = values(i);
    return out;
}

Json to_json(const Span& span) {
    return Json::array({span.start, span.end});
}

Json to_json(const std::vector<Span>& spans) {
    Json out = Json::array();
    for (const Span& s : spans) out.push_back(to_json(s));
    return out;
}

Json graph_to_json(const NetworkGraph& graph, const NetworkStats& stats) {
    const Index n = graph.vertex_count();
    const bool annotated = graph.pagerank.size() == n && static_cast<Index>(graph.modules.size()) == n &&
                           graph.clustering.size() == n;
    Json nodes = Json::array();
    for (Index v = 0; v < n; ++v) {
        Json node = {{"id", v}, {"time_index", v}, {"span", to_json(graph.span(v))},
                     {"self_loop", graph.self_loops(v)}};
        if (annotated) {
            node["pagerank"] = graph.pagerank(v);
            node["module"] = graph.modules[static_cast<std::size_t>(v)];
            node["cc"] = graph.clustering(v);
        }
        nodes.push_back(std::move(node));
    }
    Json edges = Json::array();
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (graph.has_edge(i, j)) edges.push_back({{"source", i}, {"target", j}, {"weight", graph.weights(i, j)}});
        }
    }
    return {{"vertex_count", n},
            {"segment_len", graph.segment_len},
            {"source_len", graph.source_len},
            {"modularity", graph.modularity},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)},
            {"stats", to_json(stats)}};
}

std::string graph_document(const NetworkGraph& graph, const NetworkStats& stats) {
    return graph_to_json(graph, stats).dump();
}

void write_graphml(std::ostream& out, const NetworkGraph& graph) {
    const Index n = graph.vertex_count();
    const bool annotated = graph.pagerank.size() == n && static_cast<Index>(graph.modules.size()) == n;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"time_index\" for=\"node\" attr.name=\"time_index\" attr.type=\"long\"/>\n"
        << "  <key id=\"span_start\" for=\"node\" attr.name=\"span_start\" attr.type=\"long\"/>\n"
        << "  <key id=\"span_end\" for=\"node\" attr.name=\"span_end\" attr.type=\"long\"/>\n"
        << "  <key id=\"pagerank\" for=\"node\" attr.name=\"pagerank\" attr.type=\"double\"/>\n"
        << "  <key id=\"module\" for=\"node\" attr.name=\"module\" attr.type=\"int\"/>\n"
        << "  <key id=\"cc\" for=\"node\" attr.name=\"cc\" attr.type=\"double\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"directed\">\n";
    for (Index v = 0; v < n; ++v) {
        const Span s = graph.span(v);
        out << "    <node id=\"n" << v << "\"><data key=\"time_index\">" << v << "</data><data key=\"span_start\">"
            << s.start << "</data><data key=\"span_end\">" << s.end << "</data>";
        if (annotated) {
            out << "<data key=\"pagerank\">" << Json(graph.pagerank(v)).dump() << "</data><data key=\"module\">"
                << graph.modules[static_cast<std::size_t>(v)] << "</data><data key=\"cc\">"
                << Json(graph.clustering(v)).dump() << "</data>";
        }
        out << "</node>\n";
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (!graph.has_edge(i, j)) continue;
            out << "    <edge source=\"n" << i << "\" target=\"n" << j << "\"><data key=\"weight\">"
                << Json(graph.weights(i, j)).dump() << "</data></edge>\n";
        }
    }
    out << "  </graph>\n</graphml>\n";
}

namespace {

Json shapelet_json(const Shapelet& s) {
    return {{"source", s.source},
            {"span", to_json(s.span)},
            {"origin", to_string(s.origin)},
            {"module", s.module},
            {"values", std::vector<double>(s.values.data(), s.values.data() + s.values.size())}};
}

}  // namespace

Json shapelets_to_json(const std::vector<ShapeletGroup>& groups) {
    Json out = Json::array();
    for (const auto& g : groups) {
        Json items = Json::array();
        for (const auto& s : g.shapelets) items.push_back(shapelet_json(s));
        out.push_back({{"module", g.module}, {"shapelets", std::move(items)}});
    }
    return out;
}

Json shapelets_to_json(const std::vector<Shapelet>& shapelets) {
    Json out = Json::array();
    for (const auto& s : shapelets) out.push_back(shapelet_json(s));
    return out;
}

Json anomaly_to_json(const AnomalyReport& report) {
    return {{"H", std::vector<Index>(report.isolated.begin(), report.isolated.end())},
            {"S", std::vector<Index>(report.low_clustering.begin(), report.low_clustering.end())},
            {"union", std::vector<Index>(report.candidates.begin(), report.candidates.end())},
            {"spans", to_json(report.spans)},
            {"scores", std::vector<double>(report.scores.data(), report.scores.data() + report.scores.size())},
            {"clamped", report.clamped},
            {"human_selection", report.human_selection}};
}

}  // namespace tempograph
