#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <vector>

#include <Eigen/Core>

#include "viscoex/errors.hpp"
#include "viscoex/fluid.hpp"

namespace viscoex {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <typename Scalar>
void check_omega_tau(Scalar omega_tau) {
    if (!std::isfinite(omega_tau) || omega_tau < Scalar(0)) {
        throw DomainError("omega_tau must be finite and >= 0");
    }
}

template <typename Scalar>
void check_omega(Scalar omega) {
    if (!std::isfinite(omega) || omega < Scalar(0)) {
        throw DomainError("omega must be finite and >= 0");
    }
}

}  // namespace detail

/**
 * Viscoelastic factor F = 1 / (1 + (omega tau)^2).
 *
 * F = 1 in the hydrodynamic limit and decays to 0 in the solid-like limit.
 * Above omega_tau = 1 the reciprocal form is used so that no intermediate
 * overflows.
 */
template <std::floating_point Scalar>
Scalar response_factor(Scalar omega_tau) {
    detail::check_omega_tau(omega_tau);
    if (omega_tau <= Scalar(1)) {
        return Scalar(1) / (Scalar(1) + omega_tau * omega_tau);
    }
    const Scalar u = Scalar(1) / omega_tau;
    return u * u / (Scalar(1) + u * u);
}

/// Coefficient-wise F over an Eigen array expression.
template <typename Derived>
auto response_factor(const Eigen::ArrayBase<Derived>& omega_tau) {
    using Scalar = typename Derived::Scalar;
    return omega_tau.unaryExpr([](Scalar x) { return response_factor(x); });
}

/**
 * Complex shear modulus G(omega) = G0 * i omega tau / (1 + i omega tau).
 *
 * Real part (storage) equals G0 (1 - F); imaginary part (loss) equals
 * G0 * omega tau * F.
 */
template <typename Scalar>
std::complex<Scalar> complex_shear_modulus_at(Scalar omega_tau, Scalar G0) {
    detail::check_omega_tau(omega_tau);
    const Scalar x = omega_tau;
    if (x <= Scalar(1)) {
        const Scalar d = Scalar(1) + x * x;
        return {G0 * (x * x) / d, G0 * x / d};
    }
    const Scalar u = Scalar(1) / x;
    const Scalar d = Scalar(1) + u * u;
    return {G0 / d, G0 * u / d};
}

template <typename Scalar>
std::complex<Scalar> complex_shear_modulus(Scalar omega, const BasicFluidParams<Scalar>& params) {
    detail::check_omega(omega);
    return complex_shear_modulus_at(omega * params.tau(), params.G0());
}

/// Generalized inverse viscosity (1/eta0)(1 + i omega tau).
template <typename Scalar>
std::complex<Scalar> inverse_viscosity_at(Scalar omega_tau, Scalar eta0) {
    detail::check_omega_tau(omega_tau);
    return {Scalar(1) / eta0, omega_tau / eta0};
}

template <typename Scalar>
std::complex<Scalar> inverse_viscosity(Scalar omega, const BasicFluidParams<Scalar>& params) {
    detail::check_omega(omega);
    return inverse_viscosity_at(omega * params.tau(), params.eta0());
}

template <typename Scalar>
struct ResponseSample {
    Scalar omega;
    Scalar omega_tau;
    Scalar F;
    Scalar G_real;
    Scalar G_imag;
    Scalar eta_inv_real;
    Scalar eta_inv_imag;
};

/// Evaluates F, G and 1/eta at each omega_tau of a strictly increasing grid.
template <typename Scalar>
std::vector<ResponseSample<Scalar>> frequency_sweep(const VectorX<Scalar>& omega_tau_grid,
                                                    const BasicFluidParams<Scalar>& params) {
    if (omega_tau_grid.size() == 0) {
        throw ConfigError("frequency grid is empty");
    }
    for (Eigen::Index i = 0; i < omega_tau_grid.size(); ++i) {
        const Scalar x = omega_tau_grid[i];
        if (!std::isfinite(x) || x < Scalar(0)) {
            throw ConfigError("frequency grid values must be finite and >= 0");
        }
        if (i > 0 && !(x > omega_tau_grid[i - 1])) {
            throw ConfigError("frequency grid must be strictly increasing");
        }
    }

    const Scalar tau = params.tau();
    std::vector<ResponseSample<Scalar>> samples;
    samples.reserve(static_cast<std::size_t>(omega_tau_grid.size()));
    for (const Scalar x : omega_tau_grid) {
        const auto G = complex_shear_modulus_at(x, params.G0());
        const auto eta_inv = inverse_viscosity_at(x, params.eta0());
        samples.push_back({x / tau, x, response_factor(x), G.real(), G.imag(), eta_inv.real(),
                           eta_inv.imag()});
    }
    return samples;
}

/// `count` log-spaced points from lo to hi; the endpoints are exact.
template <typename Scalar = double>
VectorX<Scalar> log_grid(Scalar lo, Scalar hi, Eigen::Index count) {
    if (!(lo > Scalar(0)) || !(hi > lo) || !std::isfinite(hi) || count < 2) {
        if (count == 1 && lo > Scalar(0) && lo == hi) {
            return VectorX<Scalar>::Constant(1, lo);
        }
        throw ConfigError("log grid needs 0 < min < max and count >= 2");
    }
    VectorX<Scalar> grid = VectorX<Scalar>::LinSpaced(count, std::log10(lo), std::log10(hi));
    grid = Eigen::pow(Scalar(10), grid.array()).matrix();
    grid[0] = lo;
    grid[count - 1] = hi;
    return grid;
}

/// `count` evenly spaced points from lo to hi.
template <typename Scalar = double>
VectorX<Scalar> linear_grid(Scalar lo, Scalar hi, Eigen::Index count) {
    if (count == 1 && lo == hi && std::isfinite(lo)) {
        return VectorX<Scalar>::Constant(1, lo);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo) || count < 2) {
        throw ConfigError("linear grid needs min < max and count >= 2");
    }
    return VectorX<Scalar>::LinSpaced(count, lo, hi);
}

}  // namespace viscoex
