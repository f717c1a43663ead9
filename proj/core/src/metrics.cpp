#include "hnus/metrics.hpp"

#include "hnus/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>

namespace hnus {

double rlne(const ComplexVector& x_hat, const ComplexVector& x) {
    if (x_hat.size() != x.size()) {
        throw DimensionError("rlne: lengths differ");
    }
    const double ref = x.norm();
    if (!(ref > 0.0)) {
        throw ParameterError("rlne: reference signal has zero norm");
    }
    return (x - x_hat).norm() / ref;
}

double rlne(const TimeSignal& x_hat, const TimeSignal& x) {
    return rlne(x_hat.samples, x.samples);
}

double pearson(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("pearson: lengths differ");
    }
    if (a.size() < 2) {
        throw DegenerateInputError("pearson: at least two samples required");
    }
    const RealVector da = a.array() - a.mean();
    const RealVector db = b.array() - b.mean();
    const double na = da.norm();
    const double nb = db.norm();
    if (na == 0.0 || nb == 0.0) {
        throw DegenerateInputError("pearson: constant input");
    }
    return std::clamp(da.dot(db) / (na * nb), -1.0, 1.0);
}

double nuclear_norm(const ComplexMatrix& matrix) {
    if (!matrix.allFinite()) {
        throw NumericError("nuclear_norm: non-finite input");
    }
    Eigen::BDCSVD<ComplexMatrix> svd(matrix);
    return svd.singularValues().sum();
}

HankelDiagnostics hankel_diagnostics(const ComplexVector& x, const HankelShape& shape) {
    const ComplexMatrix h = hankelize(x, shape);
    if (!h.allFinite()) {
        throw NumericError("hankel_diagnostics: non-finite input");
    }
    Eigen::BDCSVD<ComplexMatrix> svd(h);
    HankelDiagnostics out;
    out.singular_values = svd.singularValues();
    out.nuclear_norm = out.singular_values.sum();
    return out;
}

HankelDiagnostics hankel_diagnostics(const TimeSignal& x, const HankelShape& shape) {
    return hankel_diagnostics(x.samples, shape);
}

} // namespace hnus
