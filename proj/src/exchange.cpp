#include "viscoex/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "viscoex/errors.hpp"
#include "viscoex/quadrature.hpp"
#include "viscoex/response.hpp"

namespace viscoex {

void Orbital::validate() const {
    if (!std::isfinite(center)) {
        throw ConfigError("orbital center must be finite");
    }
    if (!std::isfinite(sigma) || !(sigma > 0.0)) {
        throw ConfigError("orbital sigma must be finite and > 0");
    }
}

double eval_orbital(const Orbital& orbital, double x) {
    const double z = (x - orbital.center) / orbital.sigma;
    const double norm = 1.0 / std::sqrt(std::sqrt(std::numbers::pi) * orbital.sigma);
    return norm * std::exp(-0.5 * z * z);
}

void InteractionKernel::validate() const {
    if (!std::isfinite(strength)) {
        throw ConfigError("kernel strength must be finite");
    }
    if (!std::isfinite(range) || !(range > 0.0)) {
        throw ConfigError("kernel range must be finite and > 0");
    }
}

double InteractionKernel::operator()(double separation) const {
    switch (kind) {
    case KernelKind::gaussian_well: {
        const double z = separation / range;
        return strength * std::exp(-0.5 * z * z);
    }
    case KernelKind::soft_coulomb:
        return strength / std::hypot(separation, range);
    }
    return 0.0;
}

void QuadratureSpec::validate() const {
    if (nodes < 32) {
        throw ConfigError("quadrature needs at least 32 nodes per axis");
    }
    if (!std::isfinite(padding) || !(padding > 0.0)) {
        throw ConfigError("quadrature padding must be finite and > 0");
    }
    if (!(norm_tolerance > 0.0)) {
        throw ConfigError("quadrature norm tolerance must be > 0");
    }
}

std::string_view to_string(IntegrationMethod method) {
    return method == IntegrationMethod::quadrature ? "quadrature" : "monte_carlo";
}

ExchangeResult& ExchangeResult::modulate(double omega_tau) {
    J_modulated = modulated_exchange(J0, omega_tau);
    const PairEnergies energies = pair_energies(A, J_modulated);
    E_sym = energies.symmetric;
    E_anti = energies.antisymmetric;
    return *this;
}

namespace {

struct PairGrid {
    QuadratureRule rule;
    Eigen::ArrayXd phi1;
    Eigen::ArrayXd phi2;
    Eigen::MatrixXd kernel;  // kernel(i, j) = U(x_j - x_i)
};

PairGrid build_grid(const Orbital& orb1, const Orbital& orb2, const InteractionKernel& kernel,
                    const QuadratureSpec& quad) {
    orb1.validate();
    orb2.validate();
    kernel.validate();
    quad.validate();

    const double half_width = std::max(std::abs(orb1.center), std::abs(orb2.center)) +
                              quad.padding * std::max(orb1.sigma, orb2.sigma);
    PairGrid grid{gauss_legendre(quad.nodes, -half_width, half_width), {}, {}, {}};
    const Eigen::VectorXd& x = grid.rule.nodes;
    grid.phi1 = eval_orbital(orb1, x);
    grid.phi2 = eval_orbital(orb2, x);

    for (const auto* phi : {&grid.phi1, &grid.phi2}) {
        const double norm = grid.rule.integrate(phi->square());
        if (!(std::abs(norm - 1.0) <= quad.norm_tolerance)) {
            throw DomainError("orbital is not normalized on the quadrature domain (norm = " +
                              std::to_string(norm) + ")");
        }
    }

    const Eigen::Index n = x.size();
    grid.kernel = Eigen::MatrixXd::NullaryExpr(
        n, n, [&](Eigen::Index i, Eigen::Index j) { return kernel(x[j] - x[i]); });
    return grid;
}

// Bilinear form (w f)^T U (w g).
double pair_form(const PairGrid& grid, const Eigen::ArrayXd& f, const Eigen::ArrayXd& g) {
    const Eigen::VectorXd wf = (grid.rule.weights.array() * f).matrix();
    const Eigen::VectorXd wg = (grid.rule.weights.array() * g).matrix();
    return wf.dot(grid.kernel * wg);
}

}  // namespace

double direct_integral(const Orbital& orb1, const Orbital& orb2, const InteractionKernel& kernel,
                       const QuadratureSpec& quad) {
    const PairGrid grid = build_grid(orb1, orb2, kernel, quad);
    return pair_form(grid, grid.phi1.square(), grid.phi2.square());
}

double exchange_integral(const Orbital& orb1, const Orbital& orb2, const InteractionKernel& kernel,
                         const QuadratureSpec& quad) {
    const PairGrid grid = build_grid(orb1, orb2, kernel, quad);
    const Eigen::ArrayXd overlap = grid.phi1 * grid.phi2;
    return pair_form(grid, overlap, overlap);
}

ExchangeResult quadrature_pair_integrals(const Orbital& orb1, const Orbital& orb2,
                                         const InteractionKernel& kernel,
                                         const QuadratureSpec& quad) {
    const PairGrid grid = build_grid(orb1, orb2, kernel, quad);
    const Eigen::ArrayXd overlap = grid.phi1 * grid.phi2;
    ExchangeResult result;
    result.method = IntegrationMethod::quadrature;
    result.A = pair_form(grid, grid.phi1.square(), grid.phi2.square());
    result.J0 = pair_form(grid, overlap, overlap);
    result.modulate(0.0);
    return result;
}

double modulated_exchange(double J0, double omega_tau) {
    return J0 * response_factor(omega_tau);
}

PairEnergies pair_energies(double A, double J) {
    if (!std::isfinite(A) || !std::isfinite(J)) {
        throw DomainError("pair energies need finite A and J");
    }
    return {A + J, A - J};
}

}  // namespace viscoex
