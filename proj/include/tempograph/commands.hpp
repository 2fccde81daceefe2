#pragma once

#include "tempograph/ingest.hpp"
#include "tempograph/run_config.hpp"

#include <filesystem>
#include <vector>

namespace tempograph {

/// The series a run operates on, with ground truth when it came from a generator.
GeneratedSeries resolve_series(const RunConfig& config);

// Each command writes its artifacts under config.out and returns the written paths.
// Outputs depend only on the config, so repeated runs are byte-identical.

/// field.txt, field.bin, markov.json, graph.json, graph.graphml, stats.json
std::vector<std::filesystem::path> cmd_encode(const RunConfig& config);

/// graph.json, stats.json, shapelets.json
std::vector<std::filesystem::path> cmd_discover(const RunConfig& config);

/// graph.json, anomaly.json
std::vector<std::filesystem::path> cmd_anomaly(const RunConfig& config);

/// predictions.csv, summary.json
std::vector<std::filesystem::path> cmd_classify(const RunConfig& config);

}  // namespace tempograph
