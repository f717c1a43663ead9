#include "hnus/errors.hpp"
#include "hnus/metrics.hpp"
#include "hnus/solvers.hpp"

#include <limits>

namespace hnus {

ReconResult lrhm_reconstruct(const ComplexVector& y, const SamplingMask& mask,
                             const SolverConfig& config, const TimeSignal* truth) {
    validate(mask);
    SolverConfig checked = config;
    checked.rank_r = 1;  // unused here
    validate(checked, mask.n);
    if (truth != nullptr && truth->size() != mask.n) {
        throw DimensionError("lrhm_reconstruct: truth length differs from mask length");
    }
    const HankelShape shape = (config.shape.n1 == 0 && config.shape.n2 == 0)
                                  ? HankelShape::square_for(mask.n)
                                  : config.shape;
    const double dt = truth != nullptr ? truth->dt : 1.0;
    const TimeSignal y0 = zero_fill(y, mask, dt);
    const std::vector<bool> sampled = mask.membership();
    const RealVector weights = antidiag_counts(shape);
    const double threshold = 1.0 / config.beta;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    ComplexVector x = y0.samples;
    ComplexMatrix lifted = hankelize(x, shape);
    ComplexMatrix multiplier = ComplexMatrix::Zero(shape.n1, shape.n2);
    ReconResult result;
    result.history.reserve(static_cast<std::size_t>(config.max_iters));

    for (int k = 0; k < config.max_iters; ++k) {
        const ComplexMatrix z = svt(lifted + multiplier, threshold);
        const ComplexVector r = dehankelize(z - multiplier);
        ComplexVector next = lrhmf_x_update(y0.samples, sampled, r, weights, config.lambda,
                                            config.beta);
        if (!next.allFinite()) {
            throw NumericError("lrhm_reconstruct: iterate became non-finite");
        }
        lifted = hankelize(next, shape);
        multiplier += config.step_tau * (lifted - z);

        const double prev_norm = x.norm();
        const double change = prev_norm > 0.0 ? (next - x).norm() / prev_norm
                                              : (next.norm() > 0.0 ? 1.0 : 0.0);
        x = std::move(next);

        IterationRecord rec;
        rec.factor_residual = (lifted - z).norm();
        rec.nuclear_norm = config.track_nuclear_norm ? nuclear_norm(lifted) : nan;
        rec.rlne = truth != nullptr ? rlne(x, truth->samples) : nan;
        rec.relative_change = change;
        result.history.push_back(rec);
        result.iterations = k + 1;
        if (change < config.tol) {
            result.converged = true;
            break;
        }
    }
    result.x_hat = TimeSignal{std::move(x), dt};
    return result;
}

} // namespace hnus
