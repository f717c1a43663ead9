#include "hnus/esprit.hpp"

#include "hnus/errors.hpp"
#include "hnus/hankel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace hnus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double f) {
    f -= std::floor(f);
    return f >= 1.0 ? 0.0 : f;
}

double wrap_two_pi(double phi) {
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) {
        phi += kTwoPi;
    }
    return phi >= kTwoPi ? 0.0 : phi;
}

} // namespace

double wrap_phase_difference(double delta) {
    double w = std::fmod(delta + std::numbers::pi, kTwoPi);
    if (w <= 0.0) {
        w += kTwoPi;
    }
    return w - std::numbers::pi;
}

double circular_frequency_distance(double a, double b) {
    const double d = std::abs(wrap_unit(a) - wrap_unit(b));
    return std::min(d, 1.0 - d);
}

ExponentialModel esprit(const TimeSignal& x, int order) {
    validate(x);
    const HankelShape shape = HankelShape::square_for(x.size());
    if (order < 1 || order > std::min(shape.n1, shape.n2) - 1) {
        throw ParameterError("esprit: order must lie in [1, min(n1, n2) - 1]");
    }
    const ComplexMatrix h = hankelize(x.samples, shape);
    Eigen::BDCSVD<ComplexMatrix> svd(h, Eigen::ComputeThinU);
    const RealVector& s = svd.singularValues();
    if (!(s[0] > 0.0) || s[order - 1] / s[0] < 1e-12) {
        throw ModelOrderError("esprit: signal subspace is rank deficient for the requested order");
    }

    const ComplexMatrix signal_space = svd.matrixU().leftCols(order);
    const Eigen::Index rows = shape.n1 - 1;
    const ComplexMatrix upper = signal_space.topRows(rows);
    const ComplexMatrix lower = signal_space.bottomRows(rows);
    const ComplexMatrix shift = upper.colPivHouseholderQr().solve(lower);
    Eigen::ComplexEigenSolver<ComplexMatrix> eig(shift, false);
    if (eig.info() != Eigen::Success) {
        throw NumericError("esprit: eigen-decomposition failed");
    }
    const ComplexVector poles = eig.eigenvalues();

    // x[k] = sum_m c_m z_m^k for k = 0..N-1, with c_m = A_m e^{i phi_m} z_m
    // because the first sample sits at n = 1.
    const Eigen::Index n = x.size();
    ComplexMatrix vandermonde(n, order);
    for (int m = 0; m < order; ++m) {
        Complex power(1.0, 0.0);
        for (Eigen::Index k = 0; k < n; ++k) {
            vandermonde(k, m) = power;
            power *= poles[m];
        }
    }
    const ComplexVector coeffs = vandermonde.colPivHouseholderQr().solve(x.samples);

    ExponentialModel model;
    model.dt = x.dt;
    for (int m = 0; m < order; ++m) {
        const Complex z = poles[m];
        const Complex weight = coeffs[m] / z;
        const double radius = std::abs(z);
        ExponentialComponent c;
        c.amplitude = std::abs(weight);
        c.phase = wrap_two_pi(std::arg(weight));
        c.frequency = wrap_unit(std::arg(z) / (kTwoPi * x.dt));
        c.damping = radius < 1.0 ? -x.dt / std::log(radius) : std::numeric_limits<double>::infinity();
        model.components.push_back(c);
    }
    std::stable_sort(model.components.begin(), model.components.end(),
                     [](const auto& a, const auto& b) { return a.frequency < b.frequency; });
    return model;
}

ComponentErrors ParameterErrors::mean() const {
    ComponentErrors out;
    if (components.empty()) {
        return out;
    }
    for (const auto& c : components) {
        out.amplitude += c.amplitude;
        out.damping += c.damping;
        out.phase += c.phase;
        out.frequency += c.frequency;
    }
    const auto n = static_cast<double>(components.size());
    out.amplitude /= n;
    out.damping /= n;
    out.phase /= n;
    out.frequency /= n;
    return out;
}

ParameterErrors parameter_errors(const ExponentialModel& estimate, const ExponentialModel& truth) {
    if (estimate.order() != truth.order()) {
        throw DimensionError("parameter_errors: models differ in order");
    }
    const auto& est = estimate.components;
    const auto& ref = truth.components;

    std::vector<std::size_t> by_strength(ref.size());
    std::iota(by_strength.begin(), by_strength.end(), 0);
    std::stable_sort(by_strength.begin(), by_strength.end(), [&](std::size_t a, std::size_t b) {
        return ref[a].amplitude > ref[b].amplitude;
    });

    ParameterErrors out;
    out.components.resize(ref.size());
    std::vector<bool> used(est.size(), false);
    for (std::size_t t : by_strength) {
        std::size_t best = est.size();
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t e = 0; e < est.size(); ++e) {
            if (used[e]) {
                continue;
            }
            const double gap = circular_frequency_distance(est[e].frequency, ref[t].frequency);
            if (gap < best_gap) {
                best_gap = gap;
                best = e;
            }
        }
        used[best] = true;
        const auto& e = est[best];
        out.components[t] = ComponentErrors{
            std::abs(e.amplitude - ref[t].amplitude),
            std::abs(e.damping - ref[t].damping),
            std::abs(wrap_phase_difference(e.phase - ref[t].phase)),
            best_gap,
        };
    }
    return out;
}

} // namespace hnus
