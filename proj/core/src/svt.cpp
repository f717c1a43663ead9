#include "hnus/errors.hpp"
#include "hnus/solvers.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace hnus {

// Works on the eigen-decomposition of the smaller Gram matrix: with
// X^H X = V diag(s^2) V^H, the shrunk matrix is X V diag((s - t) / s) V^H.
// Only singular values above t survive, so the squaring never touches the
// small ones that matter for accuracy.
ComplexMatrix svt(const ComplexMatrix& x, double threshold) {
    if (!(threshold >= 0.0)) {
        throw ParameterError("svt: threshold must be non-negative");
    }
    if (!x.allFinite()) {
        throw NumericError("svt: non-finite input");
    }
    if (x.size() == 0) {
        return x;
    }
    const bool wide = x.rows() < x.cols();
    const ComplexMatrix a = wide ? ComplexMatrix(x.adjoint()) : x;
    const ComplexMatrix gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
    if (eig.info() != Eigen::Success) {
        throw NumericError("svt: eigen-decomposition failed");
    }
    const RealVector& ev = eig.eigenvalues();  // ascending
    const Eigen::Index n = ev.size();
    Eigen::Index kept = 0;
    while (kept < n && ev[n - 1 - kept] > 0.0 && std::sqrt(ev[n - 1 - kept]) > threshold) {
        ++kept;
    }
    if (kept == 0) {
        return ComplexMatrix::Zero(x.rows(), x.cols());
    }
    const ComplexMatrix v = eig.eigenvectors().rightCols(kept);
    RealVector scale(kept);
    for (Eigen::Index i = 0; i < kept; ++i) {
        const double s = std::sqrt(ev[n - kept + i]);
        scale[i] = (s - threshold) / s;
    }
    const ComplexMatrix av = a * v;
    ComplexMatrix out = av * scale.cast<Complex>().asDiagonal() * v.adjoint();
    if (wide) {
        out.adjointInPlace();
    }
    return out;
}

} // namespace hnus
