#pragma once

#include <Eigen/Core>

namespace viscoex {

/// Nodes and weights of a one-dimensional quadrature rule.
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    Eigen::Index size() const { return nodes.size(); }

    template <typename Derived>
    double integrate(const Eigen::DenseBase<Derived>& values) const {
        return weights.dot(values.derived().matrix());
    }
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n - 1.
QuadratureRule gauss_legendre(Eigen::Index n);

/// n-point Gauss-Legendre rule affinely mapped to [a, b].
QuadratureRule gauss_legendre(Eigen::Index n, double a, double b);

}  // namespace viscoex
