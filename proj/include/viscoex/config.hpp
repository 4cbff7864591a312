#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "viscoex/exchange.hpp"
#include "viscoex/fluid.hpp"
#include "viscoex/maxwell.hpp"
#include "viscoex/transition.hpp"

namespace viscoex {

enum class OutputFormat { csv, json };
enum class MaxwellMode { stress, strain };

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    Eigen::Index count = 2;
    bool log_spaced = true;

    Eigen::VectorXd build() const;
};

struct Tolerances {
    double orbital_norm = 1e-10;
    double maxwell_residual = 1e-6;
    double max_dt_over_tau = 0.1;
};

struct RunConfig {
    FluidParams fluid{1.0, 1.0};
    OutputFormat format = OutputFormat::csv;
    RegimeThresholds thresholds;
    Tolerances tolerances;

    GridSpec response_grid{1e-3, 1e3, 61, true};

    struct Maxwell {
        MaxwellMode mode = MaxwellMode::strain;
        DriveSignal drive{DriveKind::step, 1.0, 0.0, 0.0};
        std::optional<double> dt;       // default tau / 1000
        std::optional<double> horizon;  // default 5 tau
    } maxwell;

    /// Absent: 101 linear points on [0, 10 k_gap].
    std::optional<GridSpec> dispersion_grid;

    struct Exchange {
        Orbital orb1{OrbitalKind::gaussian, -0.5, 1.0};
        Orbital orb2{OrbitalKind::gaussian, 0.5, 1.0};
        InteractionKernel kernel;
        QuadratureSpec quadrature;
        bool monte_carlo = true;
        MonteCarloSpec mc;
        double omega_tau = 0.0;
    } exchange;

    struct Transition {
        Probe probe = Probe::observation_time(1.0);
        GridSpec tau_grid{1e-13, 1e4, 171, true};
        std::optional<double> J0;
    } transition;
};

/// Parses and validates a JSON config document. Throws ConfigError naming the offending field.
RunConfig parse_config_text(std::string_view text);

/// Reads `path` and parses it; a missing or unreadable file is a ConfigError.
RunConfig parse_config(const std::filesystem::path& path);

}  // namespace viscoex
