#pragma once

#include "hnus/hankel.hpp"
#include "hnus/types.hpp"

namespace hnus {

/// ||x - x_hat||_2 / ||x||_2. Throws ParameterError for a zero reference.
double rlne(const ComplexVector& x_hat, const ComplexVector& x);
double rlne(const TimeSignal& x_hat, const TimeSignal& x);

/// Pearson's linear correlation. Throws DegenerateInputError for constant input.
double pearson(const RealVector& a, const RealVector& b);

struct HankelDiagnostics {
    RealVector singular_values;  ///< descending
    double nuclear_norm = 0.0;
};

/// Singular spectrum of the Hankel lift of x.
HankelDiagnostics hankel_diagnostics(const ComplexVector& x, const HankelShape& shape);
HankelDiagnostics hankel_diagnostics(const TimeSignal& x, const HankelShape& shape);

double nuclear_norm(const ComplexMatrix& matrix);

} // namespace hnus
