#pragma once

#include "hnus/types.hpp"

#include <cstdint>
#include <vector>

namespace hnus {

/// One damped complex exponential A e^{i phi} e^{-t / tau} e^{i 2 pi f t}.
struct ExponentialComponent {
    double amplitude = 1.0;  ///< A > 0
    double phase = 0.0;      ///< phi in [0, 2 pi)
    double damping = 100.0;  ///< tau > 0, in units of dt
    double frequency = 0.0;  ///< f in [0, 1), cycles per sample

    friend bool operator==(const ExponentialComponent&, const ExponentialComponent&) = default;
};

/// Sum of exponentials with a sampling interval. Components are kept in
/// ascending frequency order so two models can be compared index by index.
struct ExponentialModel {
    std::vector<ExponentialComponent> components;
    double dt = 1.0;

    /// Validates every component, then sorts by frequency.
    static ExponentialModel make(std::vector<ExponentialComponent> components, double dt = 1.0);

    [[nodiscard]] std::size_t order() const noexcept { return components.size(); }

    friend bool operator==(const ExponentialModel&, const ExponentialModel&) = default;
};

void validate(const ExponentialComponent& component);
void validate(const ExponentialModel& model);

/// Closed interval [lo, hi]; for the half-open ranges (phase, frequency)
/// draws land in [lo, hi).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct IntRange {
    int lo = 1;
    int hi = 1;
};

/// Parameter ranges for random models. Defaults follow the usual synthetic
/// benchmark: J in [1, 10], A in [0.05, 1], f in [0, 1), tau in [10, 179.2],
/// phi in [0, 2 pi), N = 255.
struct GeneratorSpec {
    IntRange j_range{1, 10};
    Interval amplitude_range{0.05, 1.0};
    Interval frequency_range{0.0, 1.0};
    Interval damping_range{10.0, 179.2};
    Interval phase_range{0.0, 6.283185307179586};
    int n_points = 255;
    double dt = 1.0;
};

void validate(const GeneratorSpec& spec);

/// x[n] = sum_j A_j e^{i phi_j} e^{-n dt / tau_j} e^{i 2 pi f_j n dt}, n = 1..N.
TimeSignal synthesize(const ExponentialModel& model, int n_points);

/// Draws J, then every parameter of every component independently and uniformly.
ExponentialModel random_model(const GeneratorSpec& spec, std::uint64_t seed);

/// Like random_model with a fixed order, rejecting draws until every pair of
/// frequencies is more than `min_gap` apart on the unit circle.
ExponentialModel random_separated_model(const GeneratorSpec& spec, int order, double min_gap,
                                        std::uint64_t seed);

/// Smallest circular distance between two component frequencies (1.0 for J = 1).
double min_frequency_gap(const ExponentialModel& model);

/// Adds N(0, sigma^2) independently to the real and imaginary part of each sample.
TimeSignal add_noise(const TimeSignal& signal, double sigma, std::uint64_t seed);

/// Adds outliers at floor(rate * N) distinct positions. Real parts of the
/// corruption are uniform on [-c |mean Re x|, c |mean Re x|], imaginary parts
/// likewise with mean Im x.
TimeSignal corrupt_outliers(const TimeSignal& signal, double rate, double scale_c,
                            std::uint64_t seed);

/// Reference five-peak models used in the reconstruction studies.
namespace presets {
/// Weak-peak test: amplitudes 0.1 .. 1, the weakest peak ~20x below the strongest.
ExponentialModel weak_peak_model();
/// Five peaks with mixed phases, used for single-case diagnostics.
ExponentialModel five_peak_model();
/// Four peaks used for parameter-estimation examples.
ExponentialModel four_peak_model();
} // namespace presets

} // namespace hnus
