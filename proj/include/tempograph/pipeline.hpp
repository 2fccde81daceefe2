#pragma once

#include "tempograph/encode.hpp"
#include "tempograph/netgraph.hpp"
#include "tempograph/types.hpp"

#include <cstdint>

namespace tempograph {

/// Everything needed to turn one series into an annotated graph.
struct EncodingConfig {
    int bins = 10;
    BinningMode binning = BinningMode::Gaussian;
    bool normalize = true;
    /// Patch size m; when `target_size` > 0 it takes precedence and m = ceil(n / size).
    Index segment_len = 1;
    Index target_size = 0;
    BlurKernel kernel = BlurKernel::gaussian();
    double threshold = 0.0;
    double resolution = 1.0;
    std::uint64_t seed = 0;
    double damping = 0.85;

    /// Patch size that will be used for a series of length n.
    Index patch_size(Index n) const;
    void validate() const;
};

struct Encoding {
    TimeSeries series;            // the series as binned (normalized when requested)
    Binner binner;
    BinSequence bins;
    MarkovMatrix<double> markov;
    TransitionField<double> field;
    NetworkGraph graph;           // annotated
};

/// Normalize, quantize, build W and M, blur, and read the graph off the field. With
/// `analyze` false the graph is left unannotated.
Encoding encode_series(const TimeSeries& series, const EncodingConfig& config, bool analyze = true);

}  // namespace tempograph
