#pragma once

#include "tempograph/error.hpp"
#include "tempograph/types.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace tempograph {

// ---------------------------------------------------------------------------
// Normalization and piecewise aggregate approximation
// ---------------------------------------------------------------------------

/// Population standard deviation below which a series is treated as constant.
inline constexpr double kDegenerateStd = 1e-12;

/// (x - mean) / population std. Constant inputs map to all zeros.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>
znormalize(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Index n = x.size();
    if (n == 0) return Vector();
    const Scalar mean = x.mean();
    Vector centered = x.array() - mean;
    const Scalar sd = std::sqrt(centered.squaredNorm() / static_cast<Scalar>(n));
    if (!(sd >= Scalar(kDegenerateStd))) return Vector::Zero(n);
    return centered / sd;
}

TimeSeries znormalize(const TimeSeries& series);

/// Frame means over w frames; frame i covers floor(i*n/w) <= t < floor((i+1)*n/w).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>
paa(const Eigen::MatrixBase<Derived>& x, Index frames) {
    using Scalar = typename Derived::Scalar;
    const Index n = x.size();
    if (frames < 1 || frames > n) {
        throw ArgumentError("paa: frame count must lie in [1, n]");
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(frames);
    for (Index i = 0; i < frames; ++i) {
        const Index lo = i * n / frames;
        const Index hi = (i + 1) * n / frames;
        out(i) = x.segment(lo, hi - lo).mean();
    }
    return out;
}

TimeSeries paa(const TimeSeries& series, Index frames);

// ---------------------------------------------------------------------------
// UCR text format: one record per line, first field an integer label
// ---------------------------------------------------------------------------

enum class Delimiter { Auto, Comma, Tab };

char delimiter_char(Delimiter d);
Delimiter parse_delimiter(const std::string& text);

/// Parses one split. Ragged rows and malformed numbers throw ParseError with the line.
std::vector<TimeSeries> read_ucr(std::istream& in, Delimiter delimiter = Delimiter::Auto,
                                 const std::string& name_prefix = "row");
std::vector<TimeSeries> load_ucr(const std::filesystem::path& path,
                                 Delimiter delimiter = Delimiter::Auto);

/// Writes labels as integers and values in shortest round-trip form.
void write_ucr(std::ostream& out, const std::vector<TimeSeries>& split, char delimiter = '\t');

/// Loads `<dir>/<name>_TRAIN.tsv` and `<dir>/<name>_TEST.tsv`; lengths must agree.
Dataset load_ucr_dataset(const std::filesystem::path& dir, const std::string& name);

// ---------------------------------------------------------------------------
// Synthetic signals
// ---------------------------------------------------------------------------

using State3 = std::array<double, 3>;

struct LorenzParams {
    double sigma = 10.0;
    double rho = 28.0;
    double beta = 8.0 / 3.0;
};

struct RosslerParams {
    double a = 0.2;
    double b = 0.2;
    double c = 5.7;
};

/// x-coordinate of the Lorenz system integrated with fixed-step RK4.
TimeSeries gen_lorenz(Index steps, double dt, const State3& initial, const LorenzParams& params = {});

/// x-coordinate of the Rossler system integrated with fixed-step RK4.
TimeSeries gen_rossler(Index steps, double dt, const State3& initial, const RosslerParams& params = {});

enum class BaseShape { Sine, Square, Sawtooth };
enum class RareShape { Notch, FineFeature, UnderSample };

/// Periodic base signal with rare-pattern segments spliced over declared intervals.
struct CompoundSpec {
    Index length = 500;
    BaseShape base = BaseShape::Sine;
    double period = 50.0;
    double amplitude = 1.0;
    double phase = 0.0;

    RareShape rare = RareShape::Notch;
    double notch_level = 0.0;      // notch: constant value over the window
    double fine_period = 5.0;      // fine feature: period of the superimposed ripple
    double fine_amplitude = 0.5;   // fine feature: ripple amplitude
    Index hold = 10;               // undersample: sample-and-hold width

    std::vector<Span> intervals;
    double noise = 0.0;            // std of additive Gaussian noise over the whole series
    std::uint64_t seed = 0;
};

struct GeneratedSeries {
    TimeSeries series;
    std::vector<Span> ground_truth;
};

GeneratedSeries gen_compound(const CompoundSpec& spec);

double base_signal(BaseShape shape, double t, double period, double amplitude, double phase);

}  // namespace tempograph
