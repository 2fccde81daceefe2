#include "tempograph/commands.hpp"

#include "tempograph/anomaly.hpp"
#include "tempograph/classify.hpp"
#include "tempograph/field_io.hpp"
#include "tempograph/graph_export.hpp"
#include "tempograph/mapping.hpp"

#include <fstream>
#include <sstream>

namespace tempograph {

namespace fs = std::filesystem;

namespace {

fs::path write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path.string());
    out << text;
    return path;
}

fs::path write_json(const fs::path& path, const Json& doc) {
    return write_text(path, doc.dump(2) + "\n");
}

struct Encoded {
    GeneratedSeries source;
    Encoding encoding;
    NetworkStats stats;
};

Encoded encode_run(const RunConfig& config) {
    config.validate();
    Encoded e;
    e.source = resolve_series(config);
    e.encoding = encode_series(e.source.series, config.encoding);
    e.stats = stats(e.encoding.graph, config.encoding.seed);
    fs::create_directories(config.out);
    return e;
}

Json matrix_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        rows.push_back(std::vector<double>(m.cols()));
        for (Index c = 0; c < m.cols(); ++c) rows.back()[static_cast<std::size_t>(c)] = m(r, c);
    }
    return rows;
}

}  // namespace

GeneratedSeries resolve_series(const RunConfig& config) {
    if (config.generator) return generate(*config.generator);
    if (!config.input) throw ArgumentError("no input: pass --input or --gen");
    std::vector<TimeSeries> rows = load_ucr(*config.input, config.delimiter);
    if (config.row >= static_cast<Index>(rows.size())) {
        throw ArgumentError("row " + std::to_string(config.row) + " not present in " + config.input->string());
    }
    GeneratedSeries out;
    out.series = std::move(rows[static_cast<std::size_t>(config.row)]);
    return out;
}

std::vector<fs::path> cmd_encode(const RunConfig& config) {
    const Encoded e = encode_run(config);
    const Encoding& enc = e.encoding;
    std::vector<fs::path> written;

    save_field(config.out / "field.txt", enc.field);
    written.push_back(config.out / "field.txt");
    save_field(config.out / "field.bin", enc.field);
    written.push_back(config.out / "field.bin");

    Json markov = {{"Q", enc.markov.bins},
                   {"binning", to_string(enc.binner.mode)},
                   {"breakpoints", enc.binner.breakpoints},
                   {"W", matrix_json(enc.markov.weights)},
                   {"counts", matrix_json(enc.markov.counts.cast<double>())},
                   {"bins", enc.bins}};
    written.push_back(write_json(config.out / "markov.json", markov));
    written.push_back(write_text(config.out / "graph.json", graph_document(enc.graph, e.stats)));

    std::ofstream graphml(config.out / "graph.graphml", std::ios::binary);
    write_graphml(graphml, enc.graph);
    written.push_back(config.out / "graph.graphml");

    written.push_back(write_json(config.out / "stats.json", {{"stats", to_json(e.stats)},
                                                              {"config", to_json(config.encoding)},
                                                              {"field_size", enc.field.size()}}));
    return written;
}

std::vector<fs::path> cmd_discover(const RunConfig& config) {
    const Encoded e = encode_run(config);
    std::vector<fs::path> written;
    written.push_back(write_text(config.out / "graph.json", graph_document(e.encoding.graph, e.stats)));
    written.push_back(write_json(config.out / "stats.json", {{"stats", to_json(e.stats)},
                                                              {"config", to_json(config.encoding)}}));
    const auto groups = community_shapelets(e.encoding.graph, e.source.series);
    written.push_back(write_json(config.out / "shapelets.json",
                                 {{"source", e.source.series.name},
                                  {"module_count", groups.size()},
                                  {"groups", shapelets_to_json(groups)}}));
    return written;
}

std::vector<fs::path> cmd_anomaly(const RunConfig& config) {
    const Encoded e = encode_run(config);
    const NetworkGraph& graph = e.encoding.graph;
    const Index k = default_k(graph.vertex_count());
    const AnomalyReport report = detect(graph, config.k_h.value_or(k), config.k_s.value_or(k));

    Json doc = anomaly_to_json(report);
    if (!e.source.ground_truth.empty()) {
        doc["ground_truth"] = to_json(e.source.ground_truth);
        doc["covered_samples"] = covered_samples(report.spans, e.source.ground_truth);
    }
    std::vector<fs::path> written;
    written.push_back(write_text(config.out / "graph.json", graph_document(graph, e.stats)));
    written.push_back(write_json(config.out / "anomaly.json", doc));
    return written;
}

std::vector<fs::path> cmd_classify(const RunConfig& config) {
    config.validate();
    if (!config.input || !config.test_input) {
        throw ArgumentError("classify needs --input (train split) and --test (test split)");
    }
    const std::vector<TimeSeries> train = load_ucr(*config.input, config.delimiter);
    const std::vector<TimeSeries> test = load_ucr(*config.test_input, config.delimiter);
    if (train.empty() || test.empty()) throw ArgumentError("classify: empty split");
    const std::vector<int> train_labels = labels_of(train);
    const std::vector<int> test_labels = labels_of(test);
    fs::create_directories(config.out);

    const Eigen::MatrixXd train_raw = raw_features(train);
    const Eigen::MatrixXd test_raw = raw_features(test);
    const NearestNeighborResult raw = one_nn(train_raw, train_labels, test_raw, test_labels);

    Json summary = {{"dataset", config.input->stem().string()},
                    {"train_size", train.size()},
                    {"test_size", test.size()},
                    {"length", train_raw.cols()},
                    {"config", to_json(config.encoding)},
                    {"accuracy_raw", raw.accuracy}};

    std::vector<NearestNeighborResult> combined;
    if (config.features != "raw") {
        const Eigen::MatrixXd train_stats = stats_features(train, config.encoding);
        const Eigen::MatrixXd test_stats = stats_features(test, config.encoding);
        const Standardizer standardizer = Standardizer::fit(train_stats);
        const Eigen::MatrixXd train_std = standardizer.apply(train_stats);
        const Eigen::MatrixXd test_std = standardizer.apply(test_stats);

        Json runs = Json::array();
        for (double alpha : config.alphas) {
            combined.push_back(one_nn(combine_features(train_raw, train_std, alpha), train_labels,
                                      combine_features(test_raw, test_std, alpha), test_labels));
            runs.push_back({{"alpha", alpha}, {"accuracy", combined.back().accuracy}});
        }
        summary["accuracy_combined"] = std::move(runs);

        Eigen::MatrixXd all_stats(train_stats.rows() + test_stats.rows(), NetworkStats::kCount);
        all_stats << train_stats, test_stats;
        std::vector<int> all_labels = train_labels;
        all_labels.insert(all_labels.end(), test_labels.begin(), test_labels.end());

        Json by_label = Json::array();
        for (const LabelSummary& s : summarize_by_label(all_stats, all_labels)) {
            Json mean = Json::object(), sd = Json::object();
            for (int c = 0; c < NetworkStats::kCount; ++c) {
                mean[NetworkStats::names()[c]] = s.mean(c);
                sd[NetworkStats::names()[c]] = s.stddev(c);
            }
            by_label.push_back({{"label", s.label}, {"count", s.count}, {"mean", mean}, {"std", sd}});
        }
        Json significance = Json::object();
        const auto tests = paired_significance(all_stats, all_labels);
        for (int c = 0; c < NetworkStats::kCount; ++c) {
            const WelchTest& w = tests[static_cast<std::size_t>(c)];
            significance[NetworkStats::names()[c]] =
                w.skipped ? Json{{"skipped", true}}
                          : Json{{"t", w.t}, {"dof", w.dof}, {"p_value", w.p_value}, {"significant", w.significant}};
        }
        summary["network_statistics"] = {{"by_label", by_label}, {"welch", significance}};
    }

    std::ostringstream csv;
    csv << "index,label,raw_prediction";
    for (double alpha : config.alphas) {
        if (!combined.empty()) csv << ",combined_prediction_alpha_" << Json(alpha).dump();
    }
    csv << '\n';
    for (std::size_t i = 0; i < test.size(); ++i) {
        csv << i << ',' << test_labels[i] << ',' << raw.predictions[i];
        for (const auto& c : combined) csv << ',' << c.predictions[i];
        csv << '\n';
    }
    std::vector<fs::path> written;
    written.push_back(write_text(config.out / "predictions.csv", csv.str()));
    written.push_back(write_json(config.out / "summary.json", summary));
    return written;
}

}  // namespace tempograph
