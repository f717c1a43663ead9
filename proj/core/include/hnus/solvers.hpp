#pragma once

#include "hnus/hankel.hpp"
#include "hnus/sampling.hpp"
#include "hnus/types.hpp"

#include <vector>

namespace hnus {

/// Factorization state X ~ P Q^H with the scaled multiplier D.
struct FactorPair {
    ComplexMatrix p;  ///< n1 x R
    ComplexMatrix q;  ///< n2 x R
    ComplexMatrix d;  ///< n1 x n2

    [[nodiscard]] Eigen::Index rank() const noexcept { return p.cols(); }
};

struct SolverConfig {
    double lambda = 316.22776601683796;  ///< data-consistency weight, 10^2.5
    double beta = 1.0;                   ///< ADMM penalty
    double step_tau = 1.0;               ///< multiplier step
    int rank_r = 10;                     ///< factorization rank (LRHMF only)
    int max_iters = 500;
    double tol = 1e-6;                   ///< relative change of x between iterations
    HankelShape shape{0, 0};               ///< n1 = n2 = 0 means HankelShape::square_for(N)
    bool track_nuclear_norm = true;      ///< costs one SVD per iteration
};

void validate(const SolverConfig& config, int signal_length);

struct IterationRecord {
    double factor_residual = 0.0;  ///< ||R x - P Q^H||_F (LRHMF) or ||R x - Z||_F (LRHM); spectral l1 norm for CS
    double nuclear_norm = 0.0;     ///< ||R x||_*, NaN when not tracked
    double rlne = 0.0;             ///< error against the supplied truth, NaN without one
    double relative_change = 0.0;
};

struct ReconResult {
    TimeSignal x_hat;
    int iterations = 0;
    std::vector<IterationRecord> history;
    bool converged = false;
};

/// Blend at sampled positions: (x~ + lambda y) / (1 + lambda); x~ elsewhere.
TimeSignal data_consistency(const TimeSignal& x_tilde, const ComplexVector& y,
                            const SamplingMask& mask, double lambda);

/// Singular-value soft thresholding U max(S - t, 0) V^H.
ComplexMatrix svt(const ComplexMatrix& x, double threshold);

/// Exact minimizer of lambda/2 ||y - U x||^2 + beta/2 ||R x - M||_F^2, given
/// r = dehankelize(M) and w = antidiag_counts(shape):
/// x_n = (lambda [n in Omega] y0_n + beta w_n r_n) / (lambda [n in Omega] + beta w_n).
ComplexVector lrhmf_x_update(const ComplexVector& y_zero_filled, const std::vector<bool>& sampled,
                             const ComplexVector& r, const RealVector& weights, double lambda,
                             double beta);

/// Deterministic start: P = leading R columns of R(zero_fill(y)) with unit
/// column norms, Q = identity-padded, D = 0.
FactorPair initial_factors(const ComplexVector& y_zero_filled, const HankelShape& shape, int rank);

/// One x -> P -> Q -> D sweep of the factorization ADMM. Returns the new x.
ComplexVector lrhmf_step(FactorPair& state, const ComplexVector& y_zero_filled,
                         const std::vector<bool>& sampled, const SolverConfig& config);

/// Low-rank Hankel reconstruction by factorization ADMM (SVD-free).
ReconResult lrhmf_reconstruct(const ComplexVector& y, const SamplingMask& mask,
                              const SolverConfig& config, const TimeSignal* truth = nullptr);

/// Nuclear-norm Hankel reconstruction: ADMM on Z = R x with SVT steps of 1 / beta.
ReconResult lrhm_reconstruct(const ComplexVector& y, const SamplingMask& mask,
                             const SolverConfig& config, const TimeSignal* truth = nullptr);

struct CsConfig {
    double decay = 0.98;             ///< threshold multiplier per iteration
    double noise_sigma = 0.0;        ///< threshold floor is noise_sigma * sqrt(N)
    double min_threshold_ratio = 1e-4;  ///< floor relative to the starting threshold
    int max_iters = 1000;
    double tol = 1e-6;
};

/// Iterative soft thresholding of DFT coefficients with data replacement on Omega.
ReconResult cs_ist_reconstruct(const ComplexVector& y, const SamplingMask& mask,
                               const CsConfig& config, const TimeSignal* truth = nullptr);

} // namespace hnus
