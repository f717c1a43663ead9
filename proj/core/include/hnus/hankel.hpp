#pragma once

#include "hnus/types.hpp"

namespace hnus {

/// Dimensions of the Hankel lift of a length-N vector; n1 + n2 = N + 1.
struct HankelShape {
    Eigen::Index n1 = 1;
    Eigen::Index n2 = 1;

    [[nodiscard]] Eigen::Index signal_length() const noexcept { return n1 + n2 - 1; }

    /// Near-square split: n1 = floor(N / 2) + 1. N = 255 gives 128 x 128.
    static HankelShape square_for(Eigen::Index n);

    friend bool operator==(const HankelShape&, const HankelShape&) = default;
};

void validate(const HankelShape& shape);

/// X(i, j) = x(i + j) with zero-based indices.
ComplexMatrix hankelize(const ComplexVector& x, const HankelShape& shape);
ComplexMatrix hankelize(const TimeSignal& x, const HankelShape& shape);

/// Number of matrix entries on each anti-diagonal, min(g, n1, n2, N + 1 - g).
RealVector antidiag_counts(const HankelShape& shape);

/// Anti-diagonal averaging. Left inverse of hankelize and, composed with it,
/// the orthogonal projection onto Hankel matrices. Accepts any matrix.
ComplexVector dehankelize(const ComplexMatrix& matrix);

} // namespace hnus
