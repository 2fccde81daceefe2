#pragma once

#include "tempograph/error.hpp"
#include "tempograph/types.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tempograph {

// ---------------------------------------------------------------------------
// Quantization
// ---------------------------------------------------------------------------

enum class BinningMode { Gaussian, Quantile };

BinningMode parse_binning_mode(const std::string& text);
std::string to_string(BinningMode mode);

/// Bin index sequence; values lie in [1, Q].
using BinSequence = std::vector<int>;

/// Q bins delimited by Q-1 strictly increasing breakpoints.
struct Binner {
    BinningMode mode = BinningMode::Gaussian;
    int bins = 0;
    std::vector<double> breakpoints;

    /// 1 + number of breakpoints strictly below `value`; ties go to the upper bin.
    int bin_of(double value) const {
        return 1 + static_cast<int>(std::lower_bound(breakpoints.begin(), breakpoints.end(), value) -
                                    breakpoints.begin());
    }
};

/// Gaussian: standard-normal quantiles at k/Q. Quantile: empirical quantiles of `pool`
/// (linear interpolation between order statistics).
Binner make_binner(BinningMode mode, int bins, std::span<const double> pool = {});

template <typename Derived>
BinSequence assign_bins(const Eigen::MatrixBase<Derived>& values, const Binner& binner) {
    BinSequence out(static_cast<std::size_t>(values.size()));
    for (Index i = 0; i < values.size(); ++i) {
        out[static_cast<std::size_t>(i)] = binner.bin_of(static_cast<double>(values(i)));
    }
    return out;
}

inline BinSequence assign_bins(const TimeSeries& series, const Binner& binner) {
    return assign_bins(series.values, binner);
}

// ---------------------------------------------------------------------------
// Markov matrix and transition field
// ---------------------------------------------------------------------------

/// Row-stochastic Q x Q transition matrix; rows index the source bin.
template <typename Scalar = double>
struct MarkovMatrix {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    int bins = 0;
    Matrix weights;
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;
};

template <typename Scalar = double>
MarkovMatrix<Scalar> markov_matrix(const BinSequence& seq, int bins) {
    if (bins < 1) throw ArgumentError("markov_matrix: bin count must be positive");
    if (seq.size() < 2) throw ArgumentError("markov_matrix: need at least two samples");
    MarkovMatrix<Scalar> mm;
    mm.bins = bins;
    mm.counts.setZero(bins, bins);
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
        const int from = seq[t];
        const int to = seq[t + 1];
        if (from < 1 || from > bins || to < 1 || to > bins) {
            throw ArgumentError("markov_matrix: bin index outside [1, Q]");
        }
        ++mm.counts(from - 1, to - 1);
    }
    mm.weights = mm.counts.template cast<Scalar>();
    for (Index r = 0; r < bins; ++r) {
        const Scalar total = mm.weights.row(r).sum();
        if (total > Scalar(0)) mm.weights.row(r) /= total;
    }
    return mm;
}

/// Field of transition probabilities aligned on the time axis. After blurring, vertex i
/// covers samples [i*m, min((i+1)*m, n)).
template <typename Scalar = double>
struct TransitionField {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    Matrix values;
    Index segment_len = 1;
    Index source_len = 0;
    int bins = 0;

    Index size() const { return values.rows(); }
};

/// Side length after grouping n samples in segments of m.
inline Index field_side(Index source_len, Index segment_len) {
    return (source_len + segment_len - 1) / segment_len;
}

/// M(k, l) = W(bin(x_k), bin(x_l)).
template <typename Scalar>
TransitionField<Scalar> transition_field(const BinSequence& seq, const MarkovMatrix<Scalar>& mm) {
    if (seq.size() < 2) throw ArgumentError("transition_field: need at least two samples");
    Eigen::VectorXi idx(static_cast<Index>(seq.size()));
    for (std::size_t t = 0; t < seq.size(); ++t) {
        if (seq[t] < 1 || seq[t] > mm.bins) {
            throw ArgumentError("transition_field: bin index outside [1, Q]");
        }
        idx(static_cast<Index>(t)) = seq[t] - 1;
    }
    TransitionField<Scalar> field;
    field.values = mm.weights(idx, idx);
    field.segment_len = 1;
    field.source_len = idx.size();
    field.bins = mm.bins;
    return field;
}

enum class KernelType { Average, Gaussian };

struct BlurKernel {
    KernelType type = KernelType::Gaussian;
    /// Gaussian width in cells; values <= 0 select the default m/2.
    double sigma = 0.0;

    static BlurKernel average() { return {KernelType::Average, 0.0}; }
    static BlurKernel gaussian(double sigma = 0.0) { return {KernelType::Gaussian, sigma}; }
};

KernelType parse_kernel_type(const std::string& text);
std::string to_string(KernelType type);

namespace detail {

// One axis of the patch kernel. Both kernels factor as w(r, c) = k(r) k(c), with k
// centred on the patch midpoint.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> patch_weights(Index m, const BlurKernel& kernel) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> k(m);
    if (kernel.type == KernelType::Average) {
        k.setOnes();
        return k;
    }
    const double sigma = kernel.sigma > 0.0 ? kernel.sigma : static_cast<double>(m) / 2.0;
    const double centre = static_cast<double>(m - 1) / 2.0;
    for (Index r = 0; r < m; ++r) {
        const double d = static_cast<double>(r) - centre;
        k(r) = static_cast<Scalar>(std::exp(-d * d / (2.0 * sigma * sigma)));
    }
    return k;
}

}  // namespace detail

/// Non-overlapping m x m patch reduction. Edge patches are truncated and the kernel
/// weights renormalized over the cells present.
template <typename Scalar>
TransitionField<Scalar> blur(const TransitionField<Scalar>& field, Index m, const BlurKernel& kernel) {
    if (m < 1) throw ArgumentError("blur: patch size must be >= 1");
    if (m == 1) return field;

    const Index n = field.size();
    const Index side = field_side(n, m);
    const auto weights_1d = detail::patch_weights<Scalar>(m, kernel);
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> weights = weights_1d * weights_1d.transpose();
    TransitionField<Scalar> out;
    out.values.resize(side, side);
    out.segment_len = field.segment_len * m;
    out.source_len = field.source_len;
    out.bins = field.bins;
    for (Index i = 0; i < side; ++i) {
        const Index r0 = i * m;
        const Index rows = std::min(m, n - r0);
        for (Index j = 0; j < side; ++j) {
            const Index c0 = j * m;
            const Index cols = std::min(m, n - c0);
            const auto w = weights.topLeftCorner(rows, cols);
            out.values(i, j) =
                (field.values.block(r0, c0, rows, cols).array() * w.array()).sum() / w.sum();
        }
    }
    return out;
}

/// blur(transition_field(seq, mm), m, kernel) without materializing the n x n field.
/// Row i of H holds the kernel-weighted bin histogram of segment i, so the blurred
/// field is H W H^T.
template <typename Scalar>
TransitionField<Scalar> blurred_transition_field(const BinSequence& seq, const MarkovMatrix<Scalar>& mm, Index m,
                                                 const BlurKernel& kernel) {
    if (m < 1) throw ArgumentError("blur: patch size must be >= 1");
    if (seq.size() < 2) throw ArgumentError("transition_field: need at least two samples");
    if (m == 1) return transition_field(seq, mm);

    const Index n = static_cast<Index>(seq.size());
    const Index side = field_side(n, m);
    const auto k = detail::patch_weights<Scalar>(m, kernel);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hist = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(side, mm.bins);
    for (Index t = 0; t < n; ++t) {
        const int b = seq[static_cast<std::size_t>(t)];
        if (b < 1 || b > mm.bins) throw ArgumentError("transition_field: bin index outside [1, Q]");
        hist(t / m, b - 1) += k(t % m);
    }
    for (Index i = 0; i < side; ++i) hist.row(i) /= hist.row(i).sum();

    TransitionField<Scalar> out;
    out.values = hist * mm.weights * hist.transpose();
    out.segment_len = m;
    out.source_len = n;
    out.bins = mm.bins;
    return out;
}

}  // namespace tempograph
