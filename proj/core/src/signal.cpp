#include "hnus/signal.hpp"

#include "hnus/errors.hpp"
#include "hnus/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace hnus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phase) {
    double wrapped = std::fmod(phase, kTwoPi);
    if (wrapped < 0.0) {
        wrapped += kTwoPi;
    }
    if (wrapped >= kTwoPi) {
        wrapped = 0.0;
    }
    return wrapped;
}

void check_interval(const Interval& range, const char* name) {
    if (!(std::isfinite(range.lo) && std::isfinite(range.hi)) || range.hi < range.lo) {
        throw ParameterError(std::string("GeneratorSpec: empty or invalid ") + name + " range");
    }
}

ExponentialComponent draw_component(const GeneratorSpec& spec, Rng& rng) {
    ExponentialComponent c;
    c.amplitude = rng.uniform(spec.amplitude_range.lo, spec.amplitude_range.hi);
    c.frequency = rng.uniform(spec.frequency_range.lo, spec.frequency_range.hi);
    c.damping = rng.uniform(spec.damping_range.lo, spec.damping_range.hi);
    c.phase = rng.uniform(spec.phase_range.lo, spec.phase_range.hi);
    return c;
}

} // namespace

void validate(const TimeSignal& signal) {
    if (signal.samples.size() < 2) {
        throw ParameterError("TimeSignal: at least two samples required");
    }
    if (!(signal.dt > 0.0) || !std::isfinite(signal.dt)) {
        throw ParameterError("TimeSignal: dt must be positive");
    }
    if (!signal.samples.allFinite()) {
        throw ParameterError("TimeSignal: non-finite sample");
    }
}

void validate(const ExponentialComponent& c) {
    if (!(c.amplitude > 0.0) || !std::isfinite(c.amplitude)) {
        throw ParameterError("ExponentialComponent: amplitude must be positive");
    }
    if (!(c.phase >= 0.0 && c.phase < kTwoPi)) {
        throw ParameterError("ExponentialComponent: phase must lie in [0, 2pi)");
    }
    if (!(c.damping > 0.0) || std::isnan(c.damping)) {
        throw ParameterError("ExponentialComponent: damping must be positive");
    }
    if (!(c.frequency >= 0.0 && c.frequency < 1.0)) {
        throw ParameterError("ExponentialComponent: frequency must lie in [0, 1)");
    }
}

void validate(const ExponentialModel& model) {
    if (model.components.empty()) {
        throw ParameterError("ExponentialModel: at least one component required");
    }
    if (!(model.dt > 0.0) || !std::isfinite(model.dt)) {
        throw ParameterError("ExponentialModel: dt must be positive");
    }
    for (const auto& c : model.components) {
        validate(c);
    }
}

ExponentialModel ExponentialModel::make(std::vector<ExponentialComponent> components, double dt) {
    ExponentialModel model{std::move(components), dt};
    validate(model);
    std::stable_sort(model.components.begin(), model.components.end(),
                     [](const auto& a, const auto& b) { return a.frequency < b.frequency; });
    return model;
}

void validate(const GeneratorSpec& spec) {
    if (spec.j_range.lo < 1 || spec.j_range.hi < spec.j_range.lo) {
        throw ParameterError("GeneratorSpec: empty or invalid J range");
    }
    check_interval(spec.amplitude_range, "amplitude");
    check_interval(spec.frequency_range, "frequency");
    check_interval(spec.damping_range, "damping");
    check_interval(spec.phase_range, "phase");
    if (spec.amplitude_range.lo <= 0.0 || spec.damping_range.lo <= 0.0) {
        throw ParameterError("GeneratorSpec: amplitude and damping ranges must be positive");
    }
    if (spec.frequency_range.lo < 0.0 || spec.frequency_range.hi > 1.0) {
        throw ParameterError("GeneratorSpec: frequency range must lie in [0, 1]");
    }
    if (spec.phase_range.lo < 0.0 || spec.phase_range.hi > kTwoPi) {
        throw ParameterError("GeneratorSpec: phase range must lie in [0, 2pi]");
    }
    if (spec.n_points < 2) {
        throw ParameterError("GeneratorSpec: n_points must be >= 2");
    }
    if (!(spec.dt > 0.0)) {
        throw ParameterError("GeneratorSpec: dt must be positive");
    }
}

TimeSignal synthesize(const ExponentialModel& model, int n_points) {
    if (n_points < 2) {
        throw ParameterError("synthesize: n_points must be >= 2");
    }
    validate(model);
    TimeSignal out{ComplexVector::Zero(n_points), model.dt};
    for (const auto& c : model.components) {
        const Complex weight = std::polar(c.amplitude, c.phase);
        for (int k = 0; k < n_points; ++k) {
            const double t = static_cast<double>(k + 1) * model.dt;
            out.samples[k] += weight * std::exp(Complex(-t / c.damping, kTwoPi * c.frequency * t));
        }
    }
    return out;
}

ExponentialModel random_model(const GeneratorSpec& spec, std::uint64_t seed) {
    validate(spec);
    Rng rng(seed);
    const auto order = static_cast<int>(rng.uniform_int(spec.j_range.lo, spec.j_range.hi));
    std::vector<ExponentialComponent> components;
    components.reserve(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) {
        components.push_back(draw_component(spec, rng));
    }
    return ExponentialModel::make(std::move(components), spec.dt);
}

double min_frequency_gap(const ExponentialModel& model) {
    double gap = 1.0;
    const auto& cs = model.components;
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            const double d = std::abs(cs[a].frequency - cs[b].frequency);
            gap = std::min(gap, std::min(d, 1.0 - d));
        }
    }
    return gap;
}

ExponentialModel random_separated_model(const GeneratorSpec& spec, int order, double min_gap,
                                        std::uint64_t seed) {
    validate(spec);
    if (order < 1) {
        throw ParameterError("random_separated_model: order must be >= 1");
    }
    if (min_gap * order >= (spec.frequency_range.hi - spec.frequency_range.lo)) {
        throw ParameterError("random_separated_model: frequency range cannot fit the requested gap");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<ExponentialComponent> components;
        for (int j = 0; j < order; ++j) {
            components.push_back(draw_component(spec, rng));
        }
        auto model = ExponentialModel::make(std::move(components), spec.dt);
        if (min_frequency_gap(model) > min_gap) {
            return model;
        }
    }
    throw ParameterError("random_separated_model: rejection sampling did not converge");
}

TimeSignal add_noise(const TimeSignal& signal, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("add_noise: sigma must be non-negative");
    }
    TimeSignal out = signal;
    if (sigma == 0.0) {
        return out;
    }
    Rng rng(seed);
    for (auto& s : out.samples) {
        const double re = rng.normal();
        const double im = rng.normal();
        s += Complex(sigma * re, sigma * im);
    }
    return out;
}

TimeSignal corrupt_outliers(const TimeSignal& signal, double rate, double scale_c,
                            std::uint64_t seed) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
        throw ParameterError("corrupt_outliers: rate must lie in [0, 1]");
    }
    if (!(scale_c > 0.0)) {
        throw ParameterError("corrupt_outliers: scale_c must be positive");
    }
    TimeSignal out = signal;
    const auto n = static_cast<std::int64_t>(signal.samples.size());
    const auto count = static_cast<std::int64_t>(std::floor(rate * static_cast<double>(n)));
    if (count == 0) {
        return out;
    }
    const double re_bound = scale_c * std::abs(signal.samples.real().mean());
    const double im_bound = scale_c * std::abs(signal.samples.imag().mean());

    // Partial Fisher-Yates: the first `count` entries become a uniform subset.
    std::vector<std::int64_t> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    Rng rng(seed);
    for (std::int64_t i = 0; i < count; ++i) {
        const auto j = rng.uniform_int(i, n - 1);
        std::swap(positions[static_cast<std::size_t>(i)], positions[static_cast<std::size_t>(j)]);
    }
    for (std::int64_t i = 0; i < count; ++i) {
        const auto pos = positions[static_cast<std::size_t>(i)];
        const double re = rng.uniform(-re_bound, re_bound);
        const double im = rng.uniform(-im_bound, im_bound);
        out.samples[pos] += Complex(re, im);
    }
    return out;
}

namespace presets {

ExponentialModel weak_peak_model() {
    return ExponentialModel::make({
        {0.100, 0.0, 50.0, 0.1655},
        {0.300, 0.0, 75.0, 0.3349},
        {0.500, 0.0, 100.0, 0.5004},
        {0.700, 0.0, 125.0, 0.6698},
        {1.000, 0.0, 150.0, 0.8353},
    });
}

ExponentialModel five_peak_model() {
    const double pi = std::numbers::pi;
    return ExponentialModel::make({
        {0.5145, wrap_phase(2.0 * pi / 5.0), 26.47, 0.1532},
        {0.6623, wrap_phase(4.0 * pi / 5.0), 35.63, 0.3135},
        {0.7253, wrap_phase(6.0 * pi / 5.0), 48.78, 0.4716},
        {0.7825, wrap_phase(8.0 * pi / 5.0), 61.51, 0.6124},
        {0.9872, wrap_phase(2.0 * pi), 81.50, 0.7831},
    });
}

ExponentialModel four_peak_model() {
    return ExponentialModel::make({
        {0.717, 3.5281, 173.24, 0.0706},
        {1.000, 5.6890, 126.44, 0.1534},
        {0.601, 2.1928, 31.59, 0.4166},
        {0.454, 3.8518, 107.82, 0.4833},
    });
}

} // namespace presets

} // namespace hnus
