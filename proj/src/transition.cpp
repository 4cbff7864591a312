#include "viscoex/transition.hpp"

#include <cmath>

#include "viscoex/errors.hpp"
#include "viscoex/exchange.hpp"
#include "viscoex/response.hpp"

namespace viscoex {

void RegimeThresholds::validate() const {
    if (!(active_max > 0.0 && active_max < 1.0 && inactive_min > 1.0 &&
          std::isfinite(inactive_min))) {
        throw ConfigError("thresholds must satisfy 0 < active_max < 1 < inactive_min");
    }
}

std::string_view to_string(RegimeClass regime) {
    switch (regime) {
    case RegimeClass::statistics_active:
        return "StatisticsActive";
    case RegimeClass::crossover:
        return "Crossover";
    case RegimeClass::statistics_inactive:
        return "StatisticsInactive";
    }
    return "Unknown";
}

RegimeClass classify_regime(double omega_tau, const RegimeThresholds& thresholds) {
    if (!std::isfinite(omega_tau) || omega_tau < 0.0) {
        throw DomainError("omega_tau must be finite and >= 0");
    }
    if (omega_tau < thresholds.active_max) {
        return RegimeClass::statistics_active;
    }
    if (omega_tau > thresholds.inactive_min) {
        return RegimeClass::statistics_inactive;
    }
    return RegimeClass::crossover;
}

RegimeClass measurement_window(double t_obs, double tau, const RegimeThresholds& thresholds) {
    if (!(t_obs > 0.0) || !(tau > 0.0) || !std::isfinite(t_obs) || !std::isfinite(tau)) {
        throw DomainError("t_obs and tau must be finite and > 0");
    }
    return classify_regime(tau / t_obs, thresholds);
}

double arrhenius_tau(double tau0, double activation_energy, double temperature) {
    if (!(tau0 > 0.0) || !(temperature > 0.0) || !(activation_energy >= 0.0)) {
        throw DomainError("arrhenius_tau needs tau0 > 0, T > 0, Ea >= 0");
    }
    const double tau = tau0 * std::exp(activation_energy / (boltzmann * temperature));
    if (!std::isfinite(tau)) {
        throw NumericalError("arrhenius_tau overflowed");
    }
    return tau;
}

double Probe::omega_tau(double tau) const {
    return kind == Kind::frequency ? value * tau : tau / value;
}

double Probe::crossover_tau() const {
    return kind == Kind::frequency ? 1.0 / value : value;
}

TransitionTable transition_sweep(const Probe& probe, const Eigen::VectorXd& tau_grid,
                                 const RegimeThresholds& thresholds, std::optional<double> J0) {
    thresholds.validate();
    if (!std::isfinite(probe.value) || !(probe.value > 0.0)) {
        throw ConfigError("probe frequency / observation time must be finite and > 0");
    }
    if (J0 && !std::isfinite(*J0)) {
        throw ConfigError("J0 must be finite");
    }
    if (tau_grid.size() == 0) {
        throw ConfigError("tau grid is empty");
    }
    for (Eigen::Index i = 0; i < tau_grid.size(); ++i) {
        if (!std::isfinite(tau_grid[i]) || !(tau_grid[i] > 0.0)) {
            throw ConfigError("tau grid values must be finite and > 0");
        }
        if (i > 0 && !(tau_grid[i] > tau_grid[i - 1])) {
            throw ConfigError("tau grid must be strictly increasing");
        }
    }

    TransitionTable table;
    table.rows.reserve(static_cast<std::size_t>(tau_grid.size()));
    for (const double tau : tau_grid) {
        const double x = probe.omega_tau(tau);
        if (!std::isfinite(x)) {
            throw NumericalError("omega_tau overflowed");
        }
        TransitionRow row{tau, x, response_factor(x), classify_regime(x, thresholds), {}, {}};
        if (J0) {
            row.J_modulated = modulated_exchange(*J0, x);
            row.splitting = 2.0 * *row.J_modulated;
        }
        table.rows.push_back(row);
    }

    const double crossover = probe.crossover_tau();
    if (tau_grid[0] <= crossover && crossover <= tau_grid[tau_grid.size() - 1]) {
        table.crossover_tau = crossover;
    }
    return table;
}

}  // namespace viscoex
