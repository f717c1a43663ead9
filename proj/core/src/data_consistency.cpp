#include "hnus/errors.hpp"
#include "hnus/solvers.hpp"

namespace hnus {

TimeSignal data_consistency(const TimeSignal& x_tilde, const ComplexVector& y,
                            const SamplingMask& mask, double lambda) {
    if (!(lambda >= 0.0)) {
        throw ParameterError("data_consistency: lambda must be non-negative");
    }
    if (x_tilde.samples.size() != mask.n || y.size() != mask.count()) {
        throw DimensionError("data_consistency: dimensions do not match the mask");
    }
    TimeSignal out = x_tilde;
    for (int k = 0; k < mask.count(); ++k) {
        const auto pos = mask.indices[static_cast<std::size_t>(k)] - 1;
        out.samples[pos] = (x_tilde.samples[pos] + lambda * y[k]) / (1.0 + lambda);
    }
    return out;
}

ComplexVector lrhmf_x_update(const ComplexVector& y_zero_filled, const std::vector<bool>& sampled,
                             const ComplexVector& r, const RealVector& weights, double lambda,
                             double beta) {
    const Eigen::Index n = r.size();
    if (y_zero_filled.size() != n || static_cast<Eigen::Index>(sampled.size()) != n ||
        weights.size() != n) {
        throw DimensionError("x-update: operand lengths differ");
    }
    ComplexVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double bw = beta * weights[i];
        if (sampled[static_cast<std::size_t>(i)]) {
            x[i] = (lambda * y_zero_filled[i] + bw * r[i]) / (lambda + bw);
        } else {
            x[i] = r[i];
        }
    }
    return x;
}

} // namespace hnus
