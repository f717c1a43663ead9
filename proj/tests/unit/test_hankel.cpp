#include "hnus/errors.hpp"
#include "hnus/hankel.hpp"
#include "hnus/signal.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hnus;
using hnus::testing::random_complex;

namespace {

ComplexVector real_vector(std::initializer_list<double> values) {
    ComplexVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const double x : values) {
        v[i++] = Complex(x, 0.0);
    }
    return v;
}

} // namespace

TEST(Hankelize, ThreePointExample) {
    const ComplexMatrix h = hankelize(real_vector({1, 2, 3}), {2, 2});
    ComplexMatrix expected(2, 2);
    expected << 1, 2, 2, 3;
    EXPECT_EQ(h, expected);
}

TEST(Hankelize, FivePointExample) {
    const ComplexMatrix h = hankelize(real_vector({1, 2, 3, 4, 5}), {3, 3});
    ComplexMatrix expected(3, 3);
    expected << 1, 2, 3, 2, 3, 4, 3, 4, 5;
    EXPECT_EQ(h, expected);
}

TEST(Hankelize, EntriesFollowIndexSum) {
    const ComplexVector x = random_complex(20, 1);
    const ComplexMatrix h = hankelize(x, {6, 15});
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index j = 0; j < 15; ++j) {
            ASSERT_EQ(h(i, j), x[i + j]);
        }
    }
}

TEST(Hankelize, ShapeMismatchThrows) {
    EXPECT_THROW(hankelize(real_vector({1, 2, 3}), {3, 3}), DimensionError);
    EXPECT_THROW(hankelize(real_vector({1, 2, 3}), {0, 4}), DimensionError);
}

TEST(Hankelize, NoiselessThreeComponentModelHasRankThree) {
    const ExponentialModel m = ExponentialModel::make({{1.0, 0.2, 80.0, 0.1}, {0.6, 1.0, 40.0, 0.4}, {0.3, 2.0, 150.0, 0.8}});
    const ComplexMatrix h = hankelize(synthesize(m, 255), HankelShape::square_for(255));
    const RealVector s = hnus::testing::jacobi_singular_values(h);
    EXPECT_LT(s[3] / s[0], 1e-10);
    EXPECT_GT(s[2] / s[0], 1e-6);
}

TEST(Hankelize, IsLinear) {
    const ComplexVector x = random_complex(31, 2);
    const ComplexVector y = random_complex(31, 3);
    const Complex a(0.3, -1.2);
    const Complex b(2.0, 0.5);
    const HankelShape shape = HankelShape::square_for(31);
    const ComplexMatrix lhs = hankelize(ComplexVector(a * x + b * y), shape);
    const ComplexMatrix rhs = a * hankelize(x, shape) + b * hankelize(y, shape);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(HankelShape, SquareSplit) {
    EXPECT_EQ(HankelShape::square_for(255), (HankelShape{128, 128}));
    EXPECT_EQ(HankelShape::square_for(256), (HankelShape{129, 128}));
    EXPECT_EQ(HankelShape::square_for(3), (HankelShape{2, 2}));
}

TEST(AntidiagCounts, Examples) {
    EXPECT_EQ(antidiag_counts({2, 2}), (RealVector(3) << 1, 2, 1).finished());
    EXPECT_EQ(antidiag_counts({3, 3}), (RealVector(5) << 1, 2, 3, 2, 1).finished());
    const RealVector w = antidiag_counts({128, 128});
    ASSERT_EQ(w.size(), 255);
    EXPECT_EQ(w[127], 128.0);
    EXPECT_EQ(w[0], 1.0);
    EXPECT_EQ(w[254], 1.0);
}

TEST(AntidiagCounts, MatchesBruteForceCount) {
    for (const HankelShape shape : {HankelShape{1, 7}, HankelShape{4, 9}, HankelShape{9, 4}, HankelShape{5, 5}}) {
        RealVector counted = RealVector::Zero(shape.signal_length());
        for (Eigen::Index i = 0; i < shape.n1; ++i) {
            for (Eigen::Index j = 0; j < shape.n2; ++j) {
                counted[i + j] += 1.0;
            }
        }
        EXPECT_EQ(antidiag_counts(shape), counted);
        EXPECT_EQ(antidiag_counts(shape).sum(), static_cast<double>(shape.n1 * shape.n2));
    }
}

TEST(Dehankelize, Examples) {
    ComplexMatrix h(2, 2);
    h << 1, 2, 2, 3;
    EXPECT_EQ(dehankelize(h), real_vector({1, 2, 3}));
    ComplexMatrix g(2, 2);
    g << 0, 2, 0, 3;
    EXPECT_EQ(dehankelize(g), real_vector({0, 1, 3}));
}

TEST(Dehankelize, RoundTripIsExactOnRandomVectors) {
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 3 + trial % 62;
        const ComplexVector x = random_complex(n, 100 + static_cast<std::uint64_t>(trial));
        for (const Eigen::Index n1 : {Eigen::Index{1}, n / 2 + 1, n}) {
            const ComplexVector back = dehankelize(hankelize(x, {n1, n + 1 - n1}));
            ASSERT_LE((back - x).norm(), 1e-15 * x.norm());
        }
    }
}

TEST(Dehankelize, MatchesLeastSquaresHankelProjection) {
    // Brute force: vec(H(v)) = L v, so the nearest Hankel matrix solves min ||L v - vec(M)||.
    const Eigen::MatrixXd l = hnus::testing::lifting_matrix(4, 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ComplexMatrix m = random_complex(4, 4, seed);
        const ComplexVector vec_m = Eigen::Map<const ComplexVector>(m.data(), m.size());
        const ComplexVector v = l.cast<Complex>().colPivHouseholderQr().solve(vec_m);
        const ComplexMatrix projected = hankelize(v, {4, 4});
        const ComplexMatrix ours = hankelize(dehankelize(m), {4, 4});
        EXPECT_LT((ours - projected).norm(), 1e-12);
    }
}

TEST(Dehankelize, ProjectionOnLargeMatrixIsIdempotent) {
    const ComplexMatrix m = random_complex(128, 128, 77);
    const ComplexMatrix once = hankelize(dehankelize(m), {128, 128});
    const ComplexMatrix twice = hankelize(dehankelize(once), {128, 128});
    EXPECT_LE((once - twice).norm(), 1e-15 * once.norm());
    // Residual is orthogonal to every Hankel direction.
    const ComplexVector probe = random_complex(255, 78);
    const Complex inner = (m - once).cwiseProduct(hankelize(probe, {128, 128}).conjugate()).sum();
    EXPECT_LT(std::abs(inner), 1e-9 * m.norm());
}
