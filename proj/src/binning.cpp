#include "tempograph/encode.hpp"
#include "tempograph/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace tempograph {

BinningMode parse_binning_mode(const std::string& text) {
    if (text == "gaussian") return BinningMode::Gaussian;
    if (text == "quantile") return BinningMode::Quantile;
    throw ArgumentError("unknown binning mode '" + text + "' (expected gaussian or quantile)");
}

std::string to_string(BinningMode mode) {
    return mode == BinningMode::Gaussian ? "gaussian" : "quantile";
}

KernelType parse_kernel_type(const std::string& text) {
    if (text == "average") return KernelType::Average;
    if (text == "gaussian") return KernelType::Gaussian;
    throw ArgumentError("unknown blur kernel '" + text + "' (expected average or gaussian)");
}

std::string to_string(KernelType type) {
    return type == KernelType::Average ? "average" : "gaussian";
}

Binner make_binner(BinningMode mode, int bins, std::span<const double> pool) {
    if (bins < 2) throw ArgumentError("make_binner: Q must be >= 2");

    Binner binner;
    binner.mode = mode;
    binner.bins = bins;
    binner.breakpoints.reserve(static_cast<std::size_t>(bins - 1));

    if (mode == BinningMode::Gaussian) {
        for (int k = 1; k < bins; ++k) {
            // Exact zero at the median keeps the symmetric case exact.
            binner.breakpoints.push_back(2 * k == bins ? 0.0
                                                       : special::normal_quantile(static_cast<double>(k) / bins));
        }
        return binner;
    }

    std::vector<double> sorted(pool.begin(), pool.end());
    if (std::any_of(sorted.begin(), sorted.end(), [](double v) { return !std::isfinite(v); })) {
        throw BinningError("make_binner: sample pool contains non-finite values");
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> uniq = sorted;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (static_cast<int>(uniq.size()) < bins) {
        throw BinningError("make_binner: quantile mode needs at least Q=" + std::to_string(bins) +
                           " distinct values, got " + std::to_string(uniq.size()));
    }

    const double last = static_cast<double>(sorted.size() - 1);
    for (int k = 1; k < bins; ++k) {
        const double h = last * static_cast<double>(k) / bins;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const auto hi = std::min(lo + 1, sorted.size() - 1);
        const double bp = sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
        if (!binner.breakpoints.empty() && !(bp > binner.breakpoints.back())) {
            throw BinningError("make_binner: empirical quantiles are not strictly increasing (too many ties)");
        }
        binner.breakpoints.push_back(bp);
    }
    return binner;
}

}  // namespace tempograph
