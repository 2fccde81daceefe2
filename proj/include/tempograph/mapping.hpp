#pragma once

#include "tempograph/encode.hpp"
#include "tempograph/netgraph.hpp"
#include "tempograph/types.hpp"

#include <Eigen/Core>

#include <set>
#include <string>
#include <vector>

namespace tempograph {

/// Samples covered by `vertex` when n samples are grouped in segments of m.
Span vertex_span(Index segment_len, Index source_len, Index vertex);

template <typename Scalar>
Span vertex_to_span(const TransitionField<Scalar>& field, Index vertex) {
    if (vertex < 0 || vertex >= field.size()) throw ArgumentError("vertex index out of range");
    return vertex_span(field.segment_len, field.source_len, vertex);
}

Span vertex_to_span(const NetworkGraph& graph, Index vertex);

/// Vertex whose segment contains time index t.
Index time_to_vertex(Index segment_len, Index source_len, Index t);

/// Sorted, merged spans of a vertex selection; adjacent spans are joined.
std::vector<Span> selection_to_spans(const NetworkGraph& graph, const std::set<Index>& vertices);

/// Merges an arbitrary span list into the minimal sorted cover.
std::vector<Span> merge_spans(std::vector<Span> spans);

enum class ShapeletOrigin { Community, Selection, Anomaly };
std::string to_string(ShapeletOrigin origin);

struct Shapelet {
    std::string source;
    Span span;
    Eigen::VectorXd values;
    ShapeletOrigin origin = ShapeletOrigin::Community;
    int module = -1;
};

struct ShapeletGroup {
    int module = 0;
    std::vector<Shapelet> shapelets;
};

/// Maximal runs of consecutive vertices sharing a module label, one group per label
/// in ascending label order. Requires annotated module labels.
std::vector<ShapeletGroup> community_shapelets(const NetworkGraph& graph, const TimeSeries& series);

std::vector<Shapelet> spans_to_shapelets(const TimeSeries& series, const std::vector<Span>& spans,
                                         ShapeletOrigin origin);

}  // namespace tempograph
