#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Core>

#include "viscoex/errors.hpp"
#include "viscoex/fluid.hpp"

namespace viscoex {

/**
 * Both complex roots of the viscoelastic shear-wave dispersion relation
 *
 *     omega^2 + i omega / tau - c^2 k^2 = 0
 *
 * for a plane wave exp(i(kx - omega t)). Decaying modes have Im(omega) < 0.
 * `omega_plus` is the propagating branch (Re >= 0) above the gap and the
 * slower-decaying branch below it.
 */
template <typename Scalar>
struct DispersionPoint {
    Scalar k;
    std::complex<Scalar> omega_plus;
    std::complex<Scalar> omega_minus;
};

/// Transverse sound speed sqrt(G0 / rho).
template <typename Scalar>
Scalar shear_wave_speed(const BasicFluidParams<Scalar>& params) {
    const auto rho = params.rho();
    if (!rho) {
        throw ConfigError("rho is required for shear-wave dispersion");
    }
    return std::sqrt(params.G0() / *rho);
}

/// Wavevector gap 1 / (2 c tau); no propagating shear modes below it.
template <typename Scalar>
Scalar k_gap(const BasicFluidParams<Scalar>& params) {
    return Scalar(1) / (Scalar(2) * shear_wave_speed(params) * params.tau());
}

template <typename Scalar>
DispersionPoint<Scalar> dispersion_point(Scalar k, const BasicFluidParams<Scalar>& params) {
    if (!std::isfinite(k) || k < Scalar(0)) {
        throw DomainError("k must be finite and >= 0");
    }
    const Scalar c = shear_wave_speed(params);
    const Scalar kg = k_gap(params);
    const Scalar half_rate = Scalar(1) / (Scalar(2) * params.tau());

    // Discriminant c^2 (k - kg)(k + kg): its sign follows k <=> kg exactly.
    if (k > kg) {
        const Scalar re = c * std::sqrt((k - kg) * (k + kg));
        return {k, {re, -half_rate}, {-re, -half_rate}};
    }
    const Scalar q = c * std::sqrt((kg - k) * (kg + k));
    const Scalar fast = half_rate + q;
    // Slow root from the product of roots (-c^2 k^2) to avoid cancellation.
    const Scalar slow = (c * k) * (c * k) / fast;
    return {k, {Scalar(0), Scalar(0) - slow}, {Scalar(0), -fast}};
}

template <typename Scalar>
std::vector<DispersionPoint<Scalar>> dispersion_sweep(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& k_grid, const BasicFluidParams<Scalar>& params) {
    if (k_grid.size() == 0) {
        throw ConfigError("k grid is empty");
    }
    for (Eigen::Index i = 1; i < k_grid.size(); ++i) {
        if (!(k_grid[i] > k_grid[i - 1])) {
            throw ConfigError("k grid must be strictly increasing");
        }
    }
    std::vector<DispersionPoint<Scalar>> points;
    points.reserve(static_cast<std::size_t>(k_grid.size()));
    for (const Scalar k : k_grid) {
        points.push_back(dispersion_point(k, params));
    }
    return points;
}

/// |omega^2 + i omega / tau - c^2 k^2| for a candidate root.
template <typename Scalar>
Scalar dispersion_residual(std::complex<Scalar> omega, Scalar k, const BasicFluidParams<Scalar>& params) {
    const Scalar c = shear_wave_speed(params);
    const std::complex<Scalar> i_unit(0, 1);
    return std::abs(omega * omega + i_unit * omega / params.tau() - (c * k) * (c * k));
}

}  // namespace viscoex
