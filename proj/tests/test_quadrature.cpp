#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "viscoex/errors.hpp"
#include "viscoex/quadrature.hpp"

using namespace viscoex;

TEST(GaussLegendre, WeightsSumToIntervalLength) {
    for (const Eigen::Index n : {1, 2, 5, 32, 200, 401}) {
        const QuadratureRule rule = gauss_legendre(n);
        EXPECT_NEAR(rule.weights.sum(), 2.0, 1e-13) << n;
        EXPECT_TRUE((rule.weights.array() > 0.0).all());
        for (Eigen::Index i = 1; i < n; ++i) {
            ASSERT_LT(rule.nodes[i - 1], rule.nodes[i]);
        }
    }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
    for (const Eigen::Index n : {3, 8, 20}) {
        const QuadratureRule rule = gauss_legendre(n);
        for (int degree = 0; degree <= 2 * n - 1; ++degree) {
            const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
            const double approx = rule.integrate(rule.nodes.array().pow(degree));
            ASSERT_NEAR(approx, exact, 1e-13) << "n=" << n << " degree=" << degree;
        }
    }
}

TEST(GaussLegendre, MatchesGolubWelschEigenvalues) {
    // Nodes are the eigenvalues of the symmetric Jacobi matrix with
    // off-diagonal k / sqrt(4k^2 - 1); weights are 2 v0^2.
    const int n = 24;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k - 1, k) = b;
        jacobi(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    const Eigen::VectorXd nodes = solver.eigenvalues();
    const Eigen::VectorXd weights = 2.0 * solver.eigenvectors().row(0).array().square().matrix().transpose();

    const QuadratureRule rule = gauss_legendre(n);
    EXPECT_LT((rule.nodes - nodes).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((rule.weights - weights).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(GaussLegendre, MappedInterval) {
    const QuadratureRule rule = gauss_legendre(40, -3.0, 5.0);
    EXPECT_NEAR(rule.weights.sum(), 8.0, 1e-13);
    EXPECT_NEAR(rule.integrate(rule.nodes.array().exp()), std::exp(5.0) - std::exp(-3.0), 1e-11);
    EXPECT_THROW(gauss_legendre(10, 1.0, 1.0), ConfigError);
    EXPECT_THROW(gauss_legendre(0), ConfigError);
}
