#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tempograph {

using Index = Eigen::Index;

/// Ordered real-valued samples with an optional class label.
struct TimeSeries {
    Eigen::VectorXd values;
    std::optional<int> label;
    std::string name;

    Index size() const { return values.size(); }
};

struct Dataset {
    std::vector<TimeSeries> train;
    std::vector<TimeSeries> test;
    std::string name;
};

/// Half-open range of time indices [start, end).
struct Span {
    Index start = 0;
    Index end = 0;

    Index length() const { return end - start; }
    friend bool operator==(const Span&, const Span&) = default;
};

/// Checks the pipeline entry invariants: length >= 2 and every value finite.
void validate_series(const TimeSeries& series);

}  // namespace tempograph
