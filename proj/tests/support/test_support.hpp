#pragma once

// Small helpers shared by the unit and acceptance tests.

#include "hnus/random.hpp"
#include "hnus/types.hpp"

#include <Eigen/SVD>

#include <cstdint>

namespace hnus::testing {

inline ComplexVector random_complex(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    ComplexVector v(n);
    for (auto& z : v) {
        z = Complex(rng.normal(), rng.normal());
    }
    return v;
}

inline ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            m(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    return m;
}

/// Singular values from a two-sided Jacobi SVD, independent of the library's decompositions.
inline RealVector jacobi_singular_values(const ComplexMatrix& m) {
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

/// Reference soft thresholding through a Jacobi SVD.
inline ComplexMatrix reference_svt(const ComplexMatrix& x, double t) {
    Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    RealVector s = (svd.singularValues().array() - t).max(0.0);
    return svd.matrixU() * s.cast<Complex>().asDiagonal() * svd.matrixV().adjoint();
}

/// Dense lifting matrix L with vec(hankelize(x)) = L x (column-major vec).
inline Eigen::MatrixXd lifting_matrix(Eigen::Index n1, Eigen::Index n2) {
    const Eigen::Index n = n1 + n2 - 1;
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n1 * n2, n);
    for (Eigen::Index j = 0; j < n2; ++j) {
        for (Eigen::Index i = 0; i < n1; ++i) {
            l(j * n1 + i, i + j) = 1.0;
        }
    }
    return l;
}

} // namespace hnus::testing
