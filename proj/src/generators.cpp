#include "tempograph/ingest.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace tempograph {

namespace {

template <typename Rhs>
TimeSeries integrate_rk4(Index steps, double dt, const State3& initial, Rhs&& rhs, const std::string& name) {
    if (steps < 2) throw ArgumentError(name + ": steps must be >= 2");
    if (!(dt >= 0.0) || !std::isfinite(dt)) throw ArgumentError(name + ": dt must be a finite value >= 0");

    Eigen::Vector3d s(initial[0], initial[1], initial[2]);
    if (!s.allFinite()) throw NumericError(name + ": non-finite initial state");

    TimeSeries out;
    out.name = name;
    out.values.resize(steps);
    out.values(0) = s.x();
    for (Index i = 1; i < steps; ++i) {
        const Eigen::Vector3d k1 = rhs(s);
        const Eigen::Vector3d k2 = rhs(s + 0.5 * dt * k1);
        const Eigen::Vector3d k3 = rhs(s + 0.5 * dt * k2);
        const Eigen::Vector3d k4 = rhs(s + dt * k3);
        s += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!s.allFinite()) {
            throw NumericError(name + ": state became non-finite at step " + std::to_string(i));
        }
        out.values(i) = s.x();
    }
    return out;
}

}  // namespace

TimeSeries gen_lorenz(Index steps, double dt, const State3& initial, const LorenzParams& p) {
    return integrate_rk4(
        steps, dt, initial,
        [&p](const Eigen::Vector3d& s) {
            return Eigen::Vector3d(p.sigma * (s.y() - s.x()), s.x() * (p.rho - s.z()) - s.y(),
                                   s.x() * s.y() - p.beta * s.z());
        },
        "lorenz");
}

TimeSeries gen_rossler(Index steps, double dt, const State3& initial, const RosslerParams& p) {
    return integrate_rk4(
        steps, dt, initial,
        [&p](const Eigen::Vector3d& s) {
            return Eigen::Vector3d(-s.y() - s.z(), s.x() + p.a * s.y(), p.b + s.z() * (s.x() - p.c));
        },
        "rossler");
}

double base_signal(BaseShape shape, double t, double period, double amplitude, double phase) {
    const double angle = 2.0 * std::numbers::pi * t / period + phase;
    switch (shape) {
        case BaseShape::Sine:
            return amplitude * std::sin(angle);
        case BaseShape::Square:
            return std::sin(angle) >= 0.0 ? amplitude : -amplitude;
        case BaseShape::Sawtooth: {
            const double cycles = angle / (2.0 * std::numbers::pi);
            return amplitude * (2.0 * (cycles - std::floor(cycles)) - 1.0);
        }
    }
    return 0.0;
}

GeneratedSeries gen_compound(const CompoundSpec& spec) {
    if (spec.length < 2) throw ArgumentError("gen_compound: length must be >= 2");
    if (!(spec.period > 0.0)) throw ArgumentError("gen_compound: period must be positive");
    if (spec.rare == RareShape::FineFeature && !(spec.fine_period > 0.0)) {
        throw ArgumentError("gen_compound: fine_period must be positive");
    }
    if (spec.rare == RareShape::UnderSample && spec.hold < 1) {
        throw ArgumentError("gen_compound: hold must be >= 1");
    }
    if (spec.noise < 0.0) throw ArgumentError("gen_compound: noise must be >= 0");

    std::vector<Span> truth = spec.intervals;
    std::sort(truth.begin(), truth.end(), [](const Span& a, const Span& b) { return a.start < b.start; });
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const Span& s = truth[i];
        if (s.start < 0 || s.end > spec.length || s.start >= s.end) {
            throw ArgumentError("gen_compound: injection interval [" + std::to_string(s.start) + ", " +
                                std::to_string(s.end) + ") is empty or outside the series");
        }
        if (i > 0 && truth[i - 1].end > s.start) {
            throw ArgumentError("gen_compound: injection intervals overlap");
        }
    }

    GeneratedSeries out;
    out.series.name = "compound";
    Eigen::VectorXd& x = out.series.values;
    x.resize(spec.length);
    for (Index t = 0; t < spec.length; ++t) {
        x(t) = base_signal(spec.base, static_cast<double>(t), spec.period, spec.amplitude, spec.phase);
    }

    for (const Span& s : truth) {
        for (Index t = s.start; t < s.end; ++t) {
            switch (spec.rare) {
                case RareShape::Notch:
                    x(t) = spec.notch_level;
                    break;
                case RareShape::FineFeature:
                    x(t) += spec.fine_amplitude *
                            std::sin(2.0 * std::numbers::pi * static_cast<double>(t - s.start) / spec.fine_period);
                    break;
                case RareShape::UnderSample: {
                    const Index held = s.start + (t - s.start) / spec.hold * spec.hold;
                    x(t) = base_signal(spec.base, static_cast<double>(held), spec.period, spec.amplitude,
                                       spec.phase);
                    break;
                }
            }
        }
    }

    if (spec.noise > 0.0) {
        std::mt19937_64 rng(spec.seed);
        std::normal_distribution<double> gauss(0.0, spec.noise);
        for (Index t = 0; t < spec.length; ++t) x(t) += gauss(rng);
    }
    out.ground_truth = std::move(truth);
    return out;
}

}  // namespace tempograph
