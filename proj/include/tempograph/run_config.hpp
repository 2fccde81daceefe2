#pragma once

#include "tempograph/ingest.hpp"
#include "tempograph/pipeline.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tempograph {

using Json = nlohmann::json;

/// All knobs of a CLI or service run.
struct RunConfig {
    std::optional<std::filesystem::path> input;
    std::optional<std::filesystem::path> test_input;
    std::optional<Json> generator;
    Delimiter delimiter = Delimiter::Auto;
    Index row = 0;

    EncodingConfig encoding;

    std::optional<Index> k_h;
    std::optional<Index> k_s;
    std::vector<double> alphas{1.0};
    std::string features = "both";

    std::filesystem::path out = "out";

    void validate() const;
};

/// Overrides the fields present in `doc` (same keys as the CLI long flags).
void apply_json(RunConfig& config, const Json& doc);
void apply_json(EncodingConfig& config, const Json& doc);
Json to_json(const EncodingConfig& config);

// Generator documents:
//   {"type": "lorenz",   "steps": 2000, "dt": 0.01, "initial": [1, 1, 1]}
//   {"type": "rossler",  "steps": 5000, "dt": 0.05, "initial": [1, 1, 1]}
//   {"type": "compound", "length": 500, "base": "sine", "period": 50, "amplitude": 1,
//    "rare": "notch", "intervals": [[100, 120]], "noise": 0.0, "seed": 0, ...}
CompoundSpec compound_from_json(const Json& doc);
GeneratedSeries generate(const Json& doc);

BaseShape parse_base_shape(const std::string& text);
RareShape parse_rare_shape(const std::string& text);

Json read_json_file(const std::filesystem::path& path);

}  // namespace tempograph
