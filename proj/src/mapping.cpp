#include "tempograph/mapping.hpp"

#include <algorithm>
#include <map>

namespace tempograph {

Span vertex_span(Index segment_len, Index source_len, Index vertex) {
    if (segment_len < 1) throw ArgumentError("segment length must be >= 1");
    if (vertex < 0 || vertex >= field_side(source_len, segment_len)) {
        throw ArgumentError("vertex " + std::to_string(vertex) + " out of range");
    }
    return {vertex * segment_len, std::min((vertex + 1) * segment_len, source_len)};
}

Span vertex_to_span(const NetworkGraph& graph, Index vertex) {
    if (vertex < 0 || vertex >= graph.vertex_count()) {
        throw ArgumentError("vertex " + std::to_string(vertex) + " out of range");
    }
    return graph.span(vertex);
}

Index time_to_vertex(Index segment_len, Index source_len, Index t) {
    if (t < 0 || t >= source_len) throw ArgumentError("time index out of range");
    return t / segment_len;
}

std::vector<Span> merge_spans(std::vector<Span> spans) {
    std::sort(spans.begin(), spans.end(),
              [](const Span& a, const Span& b) { return a.start != b.start ? a.start < b.start : a.end < b.end; });
    std::vector<Span> merged;
    for (const Span& s : spans) {
        if (s.length() <= 0) continue;
        if (!merged.empty() && s.start <= merged.back().end) {
            merged.back().end = std::max(merged.back().end, s.end);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

std::vector<Span> selection_to_spans(const NetworkGraph& graph, const std::set<Index>& vertices) {
    std::vector<Span> spans;
    spans.reserve(vertices.size());
    for (Index v : vertices) spans.push_back(vertex_to_span(graph, v));
    return merge_spans(std::move(spans));
}

std::string to_string(ShapeletOrigin origin) {
    switch (origin) {
        case ShapeletOrigin::Community: return "community";
        case ShapeletOrigin::Selection: return "selection";
        case ShapeletOrigin::Anomaly: return "anomaly";
    }
    return "unknown";
}

namespace {

Shapelet make_shapelet(const TimeSeries& series, const Span& span, ShapeletOrigin origin, int module) {
    if (span.start < 0 || span.end > series.size() || span.start >= span.end) {
        throw ArgumentError("span outside the source series");
    }
    Shapelet s;
    s.source = series.name;
    s.span = span;
    s.values = series.values.segment(span.start, span.length());
    s.origin = origin;
    s.module = module;
    return s;
}

}  // namespace

std::vector<ShapeletGroup> community_shapelets(const NetworkGraph& graph, const TimeSeries& series) {
    const Index n = graph.vertex_count();
    if (static_cast<Index>(graph.modules.size()) != n) {
        throw ArgumentError("community_shapelets: graph has no module labels");
    }
    if (series.size() != graph.source_len) {
        throw ArgumentError("community_shapelets: series is not the encoding source");
    }
    std::map<int, ShapeletGroup> groups;
    Index run_start = 0;
    for (Index v = 1; v <= n; ++v) {
        if (v < n && graph.modules[static_cast<std::size_t>(v)] == graph.modules[static_cast<std::size_t>(run_start)]) {
            continue;
        }
        const int label = graph.modules[static_cast<std::size_t>(run_start)];
        const Span span{graph.span(run_start).start, graph.span(v - 1).end};
        auto& group = groups[label];
        group.module = label;
        group.shapelets.push_back(make_shapelet(series, span, ShapeletOrigin::Community, label));
        run_start = v;
    }
    std::vector<ShapeletGroup> out;
    out.reserve(groups.size());
    for (auto& [label, group] : groups) out.push_back(std::move(group));
    return out;
}

std::vector<Shapelet> spans_to_shapelets(const TimeSeries& series, const std::vector<Span>& spans,
                                         ShapeletOrigin origin) {
    std::vector<Shapelet> out;
    out.reserve(spans.size());
    for (const Span& s : spans) out.push_back(make_shapelet(series, s, origin, -1));
    return out;
}

}  // namespace tempograph
