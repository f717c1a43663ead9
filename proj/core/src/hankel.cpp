#include "hnus/hankel.hpp"

#include "hnus/errors.hpp"

#include <algorithm>

namespace hnus {

HankelShape HankelShape::square_for(Eigen::Index n) {
    if (n < 1) {
        throw ParameterError("HankelShape: signal length must be positive");
    }
    const Eigen::Index n1 = n / 2 + 1;
    return HankelShape{std::min(n1, n), n + 1 - std::min(n1, n)};
}

void validate(const HankelShape& shape) {
    if (shape.n1 < 1 || shape.n2 < 1) {
        throw DimensionError("HankelShape: n1 and n2 must be positive");
    }
}

ComplexMatrix hankelize(const ComplexVector& x, const HankelShape& shape) {
    validate(shape);
    if (x.size() != shape.signal_length()) {
        throw DimensionError("hankelize: n1 + n2 must equal len(x) + 1");
    }
    ComplexMatrix out(shape.n1, shape.n2);
    for (Eigen::Index j = 0; j < shape.n2; ++j) {
        out.col(j) = x.segment(j, shape.n1);
    }
    return out;
}

ComplexMatrix hankelize(const TimeSignal& x, const HankelShape& shape) {
    return hankelize(x.samples, shape);
}

RealVector antidiag_counts(const HankelShape& shape) {
    validate(shape);
    const Eigen::Index n = shape.signal_length();
    RealVector counts(n);
    for (Eigen::Index g = 1; g <= n; ++g) {
        counts[g - 1] = static_cast<double>(std::min({g, shape.n1, shape.n2, n + 1 - g}));
    }
    return counts;
}

ComplexVector dehankelize(const ComplexMatrix& matrix) {
    const HankelShape shape{matrix.rows(), matrix.cols()};
    validate(shape);
    ComplexVector sums = ComplexVector::Zero(shape.signal_length());
    for (Eigen::Index j = 0; j < shape.n2; ++j) {
        sums.segment(j, shape.n1) += matrix.col(j);
    }
    return sums.cwiseQuotient(antidiag_counts(shape).cast<Complex>());
}

} // namespace hnus
