#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace viscoex {

/// Bounds on omega*tau (equivalently tau/t_obs) separating the three regimes.
struct RegimeThresholds {
    double active_max = 0.1;
    double inactive_min = 10.0;

    void validate() const;
};

enum class RegimeClass { statistics_active, crossover, statistics_inactive };

/// "StatisticsActive", "Crossover" or "StatisticsInactive".
std::string_view to_string(RegimeClass regime);

/// Active below active_max, inactive above inactive_min, crossover in between.
RegimeClass classify_regime(double omega_tau, const RegimeThresholds& thresholds = {});

/// Regime seen by a measurement of duration t_obs: classify_regime(tau / t_obs).
RegimeClass measurement_window(double t_obs, double tau, const RegimeThresholds& thresholds = {});

/// Boltzmann constant, J/K.
inline constexpr double boltzmann = 1.380649e-23;

/// tau0 * exp(Ea / (k_B T)); throws NumericalError if the result overflows.
double arrhenius_tau(double tau0, double activation_energy, double temperature);

/// What sets the dimensionless group: a probe frequency or an observation time.
struct Probe {
    enum class Kind { frequency, observation_time };
    Kind kind = Kind::observation_time;
    double value = 1.0;

    static Probe frequency(double omega) { return {Kind::frequency, omega}; }
    static Probe observation_time(double t_obs) { return {Kind::observation_time, t_obs}; }

    /// omega * tau, or tau / t_obs.
    double omega_tau(double tau) const;
    /// Relaxation time at which omega_tau = 1.
    double crossover_tau() const;
};

struct TransitionRow {
    double tau;
    double omega_tau;
    double F;
    RegimeClass regime;
    std::optional<double> J_modulated;
    std::optional<double> splitting;
};

struct TransitionTable {
    std::vector<TransitionRow> rows;
    /// Set when the tau grid brackets omega_tau = 1 (where F = 1/2).
    std::optional<double> crossover_tau;
};

/// Sweeps a strictly increasing grid of positive relaxation times.
TransitionTable transition_sweep(const Probe& probe, const Eigen::VectorXd& tau_grid,
                                 const RegimeThresholds& thresholds = {},
                                 std::optional<double> J0 = std::nullopt);

}  // namespace viscoex
