#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace viscoex {

enum class OrbitalKind { gaussian };

/// Real, L2-normalized one-dimensional Gaussian orbital.
struct Orbital {
    OrbitalKind kind = OrbitalKind::gaussian;
    double center = 0.0;
    double sigma = 1.0;

    void validate() const;
    bool operator==(const Orbital&) const = default;
};

/// (pi sigma^2)^(-1/4) exp(-(x - center)^2 / (2 sigma^2)).
double eval_orbital(const Orbital& orbital, double x);

template <typename Derived>
Eigen::ArrayXd eval_orbital(const Orbital& orbital, const Eigen::DenseBase<Derived>& x) {
    return x.derived().array().unaryExpr([&orbital](double xi) { return eval_orbital(orbital, xi); });
}

enum class KernelKind { gaussian_well, soft_coulomb };

/**
 * Pair interaction U(r2 - r1), a function of separation only.
 *
 *   gaussian_well  strength * exp(-r^2 / (2 range^2))
 *   soft_coulomb   strength / sqrt(r^2 + range^2)
 */
struct InteractionKernel {
    KernelKind kind = KernelKind::gaussian_well;
    double strength = 1.0;
    double range = 1.0;

    void validate() const;
    double operator()(double separation) const;
};

struct QuadratureSpec {
    Eigen::Index nodes = 200;
    /// Half-width beyond the outermost center, in units of the widest sigma.
    double padding = 10.0;
    /// Allowed deviation of the discrete orbital norm from 1.
    double norm_tolerance = 1e-10;

    void validate() const;
};

struct MonteCarloSpec {
    std::uint64_t n_samples = 100'000;
    std::uint64_t seed = 0;
    /// Worker threads; 0 picks the hardware concurrency. Never affects results.
    unsigned workers = 0;

    void validate() const;
};

enum class IntegrationMethod { quadrature, monte_carlo };

std::string_view to_string(IntegrationMethod method);

/**
 * Direct and exchange integrals with the pair energies they imply.
 * Standard errors are present only for Monte Carlo estimates.
 */
struct ExchangeResult {
    IntegrationMethod method = IntegrationMethod::quadrature;
    double A = 0.0;
    double J0 = 0.0;
    double J_modulated = 0.0;
    double E_sym = 0.0;
    double E_anti = 0.0;
    std::optional<double> stderr_A;
    std::optional<double> stderr_J0;

    /// Applies J = J0 F(omega_tau) and refreshes the pair energies.
    ExchangeResult& modulate(double omega_tau);
};

/// A = integral of U(x2 - x1) |phi1(x1)|^2 |phi2(x2)|^2 by tensor-product Gauss-Legendre.
double direct_integral(const Orbital& orb1, const Orbital& orb2, const InteractionKernel& kernel,
                       const QuadratureSpec& quad = {});

/// J0 = integral of U(x2 - x1) rho12(x1) rho12(x2), rho12 = phi1 phi2.
double exchange_integral(const Orbital& orb1, const Orbital& orb2, const InteractionKernel& kernel,
                         const QuadratureSpec& quad = {});

/// Both integrals on one grid, with J_modulated = J0.
ExchangeResult quadrature_pair_integrals(const Orbital& orb1, const Orbital& orb2,
                                         const InteractionKernel& kernel,
                                         const QuadratureSpec& quad = {});

/**
 * Importance-sampled estimates of A and J0 with standard errors.
 * Bitwise reproducible for a given (n_samples, seed) regardless of workers.
 */
ExchangeResult mc_pair_integrals(const Orbital& orb1, const Orbital& orb2,
                                 const InteractionKernel& kernel, const MonteCarloSpec& spec);

/// J = J0 / (1 + omega_tau^2).
double modulated_exchange(double J0, double omega_tau);

struct PairEnergies {
    double symmetric;
    double antisymmetric;
};

/// (A + J, A - J): symmetric and antisymmetric spatial states.
PairEnergies pair_energies(double A, double J);

}  // namespace viscoex
