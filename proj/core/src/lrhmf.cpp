#include "hnus/errors.hpp"
#include "hnus/metrics.hpp"
#include "hnus/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hnus {

namespace {

HankelShape resolve_shape(const SolverConfig& config, int n) {
    if (config.shape.n1 == 0 && config.shape.n2 == 0) {
        return HankelShape::square_for(n);
    }
    return config.shape;
}

} // namespace

void validate(const SolverConfig& config, int signal_length) {
    if (!(config.lambda > 0.0) || !(config.beta > 0.0) || !(config.step_tau > 0.0) ||
        !(config.tol > 0.0)) {
        throw ParameterError("SolverConfig: lambda, beta, step_tau and tol must be positive");
    }
    if (config.max_iters < 1) {
        throw ParameterError("SolverConfig: max_iters must be >= 1");
    }
    const HankelShape shape = resolve_shape(config, signal_length);
    validate(shape);
    if (shape.signal_length() != signal_length) {
        throw DimensionError("SolverConfig: n1 + n2 - 1 must equal the signal length");
    }
    if (config.rank_r < 1 || config.rank_r > std::min(shape.n1, shape.n2)) {
        throw ParameterError("SolverConfig: rank must lie in [1, min(n1, n2)]");
    }
}

FactorPair initial_factors(const ComplexVector& y_zero_filled, const HankelShape& shape, int rank) {
    const ComplexMatrix lifted = hankelize(y_zero_filled, shape);
    FactorPair state;
    state.p = lifted.leftCols(rank);
    for (Eigen::Index c = 0; c < state.p.cols(); ++c) {
        const double norm = state.p.col(c).norm();
        if (norm > 0.0) {
            state.p.col(c) /= norm;
        }
    }
    state.q = ComplexMatrix::Identity(shape.n2, rank);
    state.d = ComplexMatrix::Zero(shape.n1, shape.n2);
    return state;
}

ComplexVector lrhmf_step(FactorPair& state, const ComplexVector& y_zero_filled,
                         const std::vector<bool>& sampled, const SolverConfig& config) {
    const double beta = config.beta;
    const Eigen::Index rank = state.rank();
    const ComplexMatrix eye = ComplexMatrix::Identity(rank, rank);

    const ComplexVector r = dehankelize(state.p * state.q.adjoint() - state.d);
    const HankelShape shape{state.p.rows(), state.q.rows()};
    ComplexVector x =
        lrhmf_x_update(y_zero_filled, sampled, r, antidiag_counts(shape), config.lambda, beta);

    const ComplexMatrix lifted = hankelize(x, shape);
    const ComplexMatrix target = lifted + state.d;

    // beta Q^H Q + I is Hermitian positive definite, so LDLT always succeeds.
    const ComplexMatrix gram_q = beta * state.q.adjoint() * state.q + eye;
    state.p = gram_q.ldlt().solve((beta * target * state.q).adjoint()).adjoint();
    const ComplexMatrix gram_p = beta * state.p.adjoint() * state.p + eye;
    state.q = gram_p.ldlt().solve((beta * target.adjoint() * state.p).adjoint()).adjoint();
    state.d += config.step_tau * (lifted - state.p * state.q.adjoint());
    return x;
}

ReconResult lrhmf_reconstruct(const ComplexVector& y, const SamplingMask& mask,
                              const SolverConfig& config, const TimeSignal* truth) {
    validate(mask);
    validate(config, mask.n);
    if (truth != nullptr && truth->size() != mask.n) {
        throw DimensionError("lrhmf_reconstruct: truth length differs from mask length");
    }
    const HankelShape shape = resolve_shape(config, mask.n);
    const double dt = truth != nullptr ? truth->dt : 1.0;
    const TimeSignal y0 = zero_fill(y, mask, dt);
    const std::vector<bool> sampled = mask.membership();

    FactorPair state = initial_factors(y0.samples, shape, config.rank_r);
    ComplexVector x = y0.samples;
    ReconResult result;
    result.history.reserve(static_cast<std::size_t>(config.max_iters));
    const double nan = std::numeric_limits<double>::quiet_NaN();

    for (int k = 0; k < config.max_iters; ++k) {
        ComplexVector next = lrhmf_step(state, y0.samples, sampled, config);
        if (!next.allFinite()) {
            throw NumericError("lrhmf_reconstruct: iterate became non-finite");
        }
        const double prev_norm = x.norm();
        const double change = prev_norm > 0.0 ? (next - x).norm() / prev_norm
                                              : (next.norm() > 0.0 ? 1.0 : 0.0);
        x = std::move(next);

        IterationRecord rec;
        const ComplexMatrix lifted = hankelize(x, shape);
        rec.factor_residual = (lifted - state.p * state.q.adjoint()).norm();
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
