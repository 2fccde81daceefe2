#include "tempograph/ingest.hpp"

#include <cmath>
#include <string>

namespace tempograph {

void validate_series(const TimeSeries& series) {
    if (series.size() < 2) {
        throw ArgumentError("series '" + series.name + "' needs at least 2 samples");
    }
    if (!series.values.allFinite()) {
        throw ArgumentError("series '" + series.name + "' contains non-finite values");
    }
}

TimeSeries znormalize(const TimeSeries& series) {
    TimeSeries out = series;
    out.values = znormalize(series.values);
    return out;
}

TimeSeries paa(const TimeSeries& series, Index frames) {
    TimeSeries out = series;
    out.values = paa(series.values, frames);
    return out;
}

}  // namespace tempograph
