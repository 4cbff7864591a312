#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "viscoex/errors.hpp"

namespace viscoex {

/**
 * Maxwell fluid: viscosity eta0 [Pa s], instantaneous shear modulus G0 [Pa]
 * and an optional mass density rho [kg/m^3].
 *
 * The relaxation time is always derived as eta0 / G0 and never stored.
 */
template <typename Scalar>
class BasicFluidParams {
public:
    BasicFluidParams(Scalar eta0, Scalar G0, std::optional<Scalar> rho = std::nullopt)
        : eta0_(eta0), G0_(G0), rho_(rho) {
        require_positive(eta0_, "eta0");
        require_positive(G0_, "G0");
        if (rho_) {
            require_positive(*rho_, "rho");
        }
    }

    /// Fluid with relaxation time tau and modulus G0 (eta0 = G0 * tau).
    static BasicFluidParams from_tau(Scalar tau, Scalar G0, std::optional<Scalar> rho = std::nullopt) {
        return BasicFluidParams(G0 * tau, G0, rho);
    }

    Scalar eta0() const { return eta0_; }
    Scalar G0() const { return G0_; }
    std::optional<Scalar> rho() const { return rho_; }
    Scalar tau() const { return eta0_ / G0_; }

    /// Same fluid with eta0 and G0 multiplied by `factor`.
    BasicFluidParams scaled(Scalar factor) const {
        return BasicFluidParams(eta0_ * factor, G0_ * factor, rho_);
    }

private:
    static void require_positive(Scalar value, const char* name) {
        if (!std::isfinite(value) || !(value > Scalar(0))) {
            throw ConfigError(std::string(name) + " must be finite and > 0");
        }
    }

    Scalar eta0_;
    Scalar G0_;
    std::optional<Scalar> rho_;
};

using FluidParams = BasicFluidParams<double>;

}  // namespace viscoex
