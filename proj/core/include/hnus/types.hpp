#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>

namespace hnus {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Sampled time-domain signal; `samples[k]` holds x at time (k + 1) * dt.
struct TimeSignal {
    ComplexVector samples;
    double dt = 1.0;

    [[nodiscard]] Eigen::Index size() const noexcept { return samples.size(); }
};

/// Checks length >= 2, dt > 0 and finiteness; throws ParameterError otherwise.
void validate(const TimeSignal& signal);

} // namespace hnus
