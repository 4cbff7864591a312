#include "viscoex/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "viscoex/errors.hpp"

namespace viscoex {

namespace {

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(Eigen::Index n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (Eigen::Index k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
    }
    return {p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(Eigen::Index n) {
    if (n < 1) {
        throw ConfigError("quadrature needs at least one node");
    }
    QuadratureRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
    const Eigen::Index half = (n + 1) / 2;
    for (Eigen::Index i = 0; i < half; ++i) {
        // Newton iteration from the Tricomi estimate of the i-th largest root.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre_with_derivative(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16) {
                break;
            }
        }
        const double dp = legendre_with_derivative(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

QuadratureRule gauss_legendre(Eigen::Index n, double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
        throw ConfigError("quadrature interval must satisfy a < b");
    }
    QuadratureRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    rule.nodes = (mid + half * rule.nodes.array()).matrix();
    rule.weights *= half;
    return rule;
}

}  // namespace viscoex
