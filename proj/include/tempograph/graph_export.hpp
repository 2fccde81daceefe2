#pragma once

#include "tempograph/anomaly.hpp"
#include "tempograph/mapping.hpp"
#include "tempograph/netgraph.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tempograph {

using Json = nlohmann::json;

Json to_json(const NetworkStats& stats);
Json to_json(const Span& span);
Json to_json(const std::vector<Span>& spans);

/// {nodes:[{id, time_index, span, pagerank, module, cc}], edges:[{source, target, weight}], stats}
Json graph_to_json(const NetworkGraph& graph, const NetworkStats& stats);

/// Canonical serialized form shared by the CLI and the service.
std::string graph_document(const NetworkGraph& graph, const NetworkStats& stats);

void write_graphml(std::ostream& out, const NetworkGraph& graph);

Json shapelets_to_json(const std::vector<ShapeletGroup>& groups);
Json shapelets_to_json(const std::vector<Shapelet>& shapelets);

/// {H, S, union, spans, scores, clamped, human_selection}
Json anomaly_to_json(const AnomalyReport& report);

}  // namespace tempograph
