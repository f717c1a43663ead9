#include "hnus/errors.hpp"
#include "hnus/metrics.hpp"
#include "hnus/solvers.hpp"
#include "hnus/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hnus {

namespace {

void soft_threshold(ComplexVector& bins, double threshold) {
    for (auto& b : bins) {
        const double mag = std::abs(b);
        b = mag > threshold ? b * ((mag - threshold) / mag) : Complex(0.0, 0.0);
    }
}

} // namespace

ReconResult cs_ist_reconstruct(const ComplexVector& y, const SamplingMask& mask,
                               const CsConfig& config, const TimeSignal* truth) {
    validate(mask);
    if (!(config.decay > 0.0 && config.decay < 1.0)) {
        throw ParameterError("cs_ist_reconstruct: decay must lie in (0, 1)");
    }
    if (config.max_iters < 1 || !(config.tol > 0.0) || !(config.noise_sigma >= 0.0)) {
        throw ParameterError("cs_ist_reconstruct: invalid iteration settings");
    }
    if (truth != nullptr && truth->size() != mask.n) {
        throw DimensionError("cs_ist_reconstruct: truth length differs from mask length");
    }
    const double dt = truth != nullptr ? truth->dt : 1.0;
    const TimeSignal y0 = zero_fill(y, mask, dt);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    ReconResult result;
    ComplexVector x = y0.samples;
    const double start = spectrum(x).bins.cwiseAbs().maxCoeff();
    if (start == 0.0) {
        result.x_hat = y0;
        result.converged = true;
        return result;
    }
    const double floor = std::max(config.noise_sigma * std::sqrt(static_cast<double>(mask.n)),
                                  config.min_threshold_ratio * start);
    double threshold = start;

    for (int k = 0; k < config.max_iters; ++k) {
        ComplexVector bins = spectrum(x).bins;
        soft_threshold(bins, threshold);
        ComplexVector next = inverse_spectrum(bins);
        for (int m = 0; m < mask.count(); ++m) {
            next[mask.indices[static_cast<std::size_t>(m)] - 1] = y[m];
        }
        const double prev_norm = x.norm();
        const double change = prev_norm > 0.0 ? (next - x).norm() / prev_norm : 0.0;
        x = std::move(next);

        IterationRecord rec;
        rec.factor_residual = bins.cwiseAbs().sum();
        rec.nuclear_norm = nan;
        rec.rlne = truth != nullptr ? rlne(x, truth->samples) : nan;
        rec.relative_change = change;
        result.history.push_back(rec);
        result.iterations = k + 1;

        const bool at_floor = threshold <= floor;
        if (at_floor && change < config.tol) {
            result.converged = true;
            break;
        }
        threshold = std::max(floor, threshold * config.decay);
    }
    result.x_hat = TimeSignal{std::move(x), dt};
    return result;
}

} // namespace hnus
