#include "tempograph/pipeline.hpp"

#include "tempograph/ingest.hpp"

#include <cmath>
#include <span>

namespace tempograph {

Index EncodingConfig::patch_size(Index n) const {
    if (target_size > 0) return std::max<Index>(1, (n + target_size - 1) / target_size);
    return segment_len;
}

void EncodingConfig::validate() const {
    if (bins < 2) throw ArgumentError("Q must be >= 2");
    if (segment_len < 1) throw ArgumentError("m must be >= 1");
    if (target_size < 0) throw ArgumentError("size must be >= 0");
    if (!(threshold >= 0.0)) throw ArgumentError("threshold must be >= 0");
    if (!(resolution > 0.0)) throw ArgumentError("resolution must be > 0");
    if (!(damping > 0.0 && damping < 1.0)) throw ArgumentError("damping must lie in (0, 1)");
    if (!(kernel.sigma >= 0.0) || !std::isfinite(kernel.sigma)) throw ArgumentError("sigma must be >= 0");
}

Encoding encode_series(const TimeSeries& series, const EncodingConfig& config, bool analyze) {
    config.validate();
    validate_series(series);

    Encoding enc;
    enc.series = config.normalize ? znormalize(series) : series;
    const Eigen::VectorXd& x = enc.series.values;
    enc.binner = make_binner(config.binning, config.bins, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    enc.bins = assign_bins(x, enc.binner);
    enc.markov = markov_matrix<double>(enc.bins, config.bins);
    enc.field = blurred_transition_field(enc.bins, enc.markov, config.patch_size(x.size()), config.kernel);
    enc.graph = build_graph(enc.field, config.threshold);
    if (!analyze) return enc;

    AnalysisOptions analysis;
    analysis.pagerank.damping = config.damping;
    analysis.resolution = config.resolution;
    analysis.seed = config.seed;
    annotate(enc.graph, analysis);
    return enc;
}

}  // namespace tempograph
