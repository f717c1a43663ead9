#pragma once

#include "hnus/signal.hpp"
#include "hnus/types.hpp"

#include <vector>

namespace hnus {

/// Estimates a `order`-component model by ESPRIT on the near-square Hankel
/// lift: signal subspace from a truncated SVD, poles from shift invariance,
/// complex amplitudes from a Vandermonde least-squares fit. Poles on or
/// outside the unit circle get damping = +infinity.
/// Throws ModelOrderError when sigma_order / sigma_1 < 1e-12.
ExponentialModel esprit(const TimeSignal& x, int order);

struct ComponentErrors {
    double amplitude = 0.0;
    double damping = 0.0;
    double phase = 0.0;      ///< |wrap(phi_est - phi)| with wrap to (-pi, pi]
    double frequency = 0.0;  ///< circular distance on [0, 1)
};

/// One entry per truth component, in the truth model's order.
struct ParameterErrors {
    std::vector<ComponentErrors> components;

    [[nodiscard]] ComponentErrors mean() const;
};

/// Pairs each truth component (strongest first) with the closest unused
/// estimate in circular frequency, then takes absolute errors.
ParameterErrors parameter_errors(const ExponentialModel& estimate, const ExponentialModel& truth);

double wrap_phase_difference(double delta);
double circular_frequency_distance(double a, double b);

} // namespace hnus
