#include "viscoex/maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "viscoex/errors.hpp"

namespace viscoex {

namespace {

constexpr Eigen::Index max_samples = 100'000'000;

struct Level {
    double value;
    double rate;
};

// Waveform value and time derivative for t > 0.
Level waveform(const DriveSignal& drive, double t) {
    switch (drive.kind) {
    case DriveKind::step:
    case DriveKind::constant:
        return {drive.amplitude, 0.0};
    case DriveKind::sinusoid: {
        const double arg = drive.omega * t + drive.phase;
        return {drive.amplitude * std::cos(arg), -drive.amplitude * drive.omega * std::sin(arg)};
    }
    }
    return {0.0, 0.0};
}

template <typename Rhs>
double rk4_step(const Rhs& rhs, double t, double y, double h) {
    const double k1 = rhs(t, y);
    const double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = rhs(t + h, y + h * k3);
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Eigen::Index sample_count(const StepControl& control, const FluidParams& params) {
    const double tau = params.tau();
    if (!std::isfinite(control.dt) || !(control.dt > 0.0)) {
        throw ConfigError("dt must be finite and > 0");
    }
    if (!std::isfinite(control.horizon) || control.horizon < control.dt) {
        throw ConfigError("horizon must be finite and >= dt");
    }
    if (control.dt > control.max_dt_over_tau * tau) {
        throw ConfigError("dt = " + std::to_string(control.dt) + " exceeds " +
                          std::to_string(control.max_dt_over_tau) + " * tau");
    }
    const double steps = std::ceil(control.horizon / control.dt * (1.0 - 1e-12));
    if (steps + 1.0 > static_cast<double>(max_samples)) {
        throw ConfigError("horizon / dt requests too many samples");
    }
    return static_cast<Eigen::Index>(steps) + 1;
}

TimeSeries allocate(Eigen::Index n, double dt) {
    TimeSeries out;
    out.t = Eigen::VectorXd::LinSpaced(n, 0.0, dt * static_cast<double>(n - 1));
    out.stress.resize(n);
    out.strain.resize(n);
    out.strain_rate.resize(n);
    return out;
}

}  // namespace

void DriveSignal::validate() const {
    if (!std::isfinite(amplitude)) {
        throw ConfigError("drive amplitude must be finite");
    }
    if (!std::isfinite(omega) || omega < 0.0) {
        throw ConfigError("drive omega must be finite and >= 0");
    }
    if (!std::isfinite(phase)) {
        throw ConfigError("drive phase must be finite");
    }
}

StepControl StepControl::defaults_for(const FluidParams& params) {
    const double tau = params.tau();
    return {tau / 1000.0, 5.0 * tau, 0.1};
}

TimeSeries integrate_stress_driven(const DriveSignal& drive, const FluidParams& params,
                                   const StepControl& control) {
    drive.validate();
    const Eigen::Index n = sample_count(control, params);
    const double eta0 = params.eta0();
    const double G0 = params.G0();

    const auto strain_rate = [&](double t, double /*strain*/) {
        const Level P = waveform(drive, t);
        return P.value / eta0 + P.rate / G0;
    };

    TimeSeries out = allocate(n, control.dt);
    double strain = waveform(drive, 0.0).value / G0;  // elastic jump at 0+
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = out.t[i];
        out.stress[i] = waveform(drive, t).value;
        out.strain[i] = strain;
        out.strain_rate[i] = strain_rate(t, strain);
        if (i + 1 < n) {
            strain = rk4_step(strain_rate, t, strain, control.dt);
        }
    }
    return out;
}

TimeSeries integrate_strain_driven(const DriveSignal& drive, const FluidParams& params,
                                   const StepControl& control) {
    drive.validate();
    const Eigen::Index n = sample_count(control, params);
    const double G0 = params.G0();
    const double tau = params.tau();

    const bool rate_drive = drive.kind == DriveKind::constant;
    const auto strain_at = [&](double t) {
        return rate_drive ? drive.amplitude * t : waveform(drive, t).value;
    };
    const auto rate_at = [&](double t) {
        return rate_drive ? drive.amplitude : waveform(drive, t).rate;
    };
    const auto stress_rate = [&](double t, double stress) { return G0 * rate_at(t) - stress / tau; };

    TimeSeries out = allocate(n, control.dt);
    double stress = G0 * strain_at(0.0);  // elastic response to the strain jump at 0+
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = out.t[i];
        out.stress[i] = stress;
        out.strain[i] = strain_at(t);
        out.strain_rate[i] = rate_at(t);
        if (i + 1 < n) {
            stress = rk4_step(stress_rate, t, stress, control.dt);
        }
    }
    return out;
}

TimeSeries integrate_strain_driven(const TimeSeries& history, const FluidParams& params) {
    const Eigen::Index n = history.size();
    if (n < 4 || history.strain.size() != n || history.strain_rate.size() != n) {
        throw ConfigError("tabulated strain history needs at least 4 consistent samples");
    }
    const double h = history.dt();
    if (!(h > 0.0)) {
        throw ConfigError("tabulated strain history must have increasing time");
    }
    const double G0 = params.G0();
    const double tau = params.tau();
    const Eigen::VectorXd& rate = history.strain_rate;

    // Cubic Lagrange interpolation of the strain rate at the interval midpoint.
    const auto midpoint_rate = [&](Eigen::Index i) {
        if (i == 0) {
            return 0.3125 * rate[0] + 0.9375 * rate[1] - 0.3125 * rate[2] + 0.0625 * rate[3];
        }
        if (i == n - 2) {
            return 0.3125 * rate[n - 1] + 0.9375 * rate[n - 2] - 0.3125 * rate[n - 3] +
                   0.0625 * rate[n - 4];
        }
        return (-rate[i - 1] + 9.0 * rate[i] + 9.0 * rate[i + 1] - rate[i + 2]) / 16.0;
    };

    TimeSeries out;
    out.t = history.t;
    out.strain = history.strain;
    out.strain_rate = history.strain_rate;
    out.stress.resize(n);

    double stress = G0 * history.strain[0];
    out.stress[0] = stress;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double r0 = rate[i];
        const double rm = midpoint_rate(i);
        const double r1 = rate[i + 1];
        const double k1 = G0 * r0 - stress / tau;
        const double k2 = G0 * rm - (stress + 0.5 * h * k1) / tau;
        const double k3 = G0 * rm - (stress + 0.5 * h * k2) / tau;
        const double k4 = G0 * r1 - (stress + h * k3) / tau;
        stress += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.stress[i + 1] = stress;
    }
    return out;
}

double maxwell_residual(const TimeSeries& series, const FluidParams& params) {
    const Eigen::Index n = series.size();
    if (n < 3) {
        throw ConfigError("residual needs at least 3 samples");
    }
    const double h = series.dt();
    const auto derivative = [h, n](const Eigen::VectorXd& f, Eigen::Index i) {
        if (i == 0) {
            return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
        }
        if (i == n - 1) {
            return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
        }
        return (f[i + 1] - f[i - 1]) / (2.0 * h);
    };

    const double eta0 = params.eta0();
    const double G0 = params.G0();
    double worst = 0.0;
    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double strain_rate = derivative(series.strain, i);
        const double viscous = series.stress[i] / eta0;
        const double elastic = derivative(series.stress, i) / G0;
        worst = std::max(worst, std::abs(strain_rate - viscous - elastic));
        scale = std::max({scale, std::abs(strain_rate), std::abs(viscous), std::abs(elastic)});
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

}  // namespace viscoex
