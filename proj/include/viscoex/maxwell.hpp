#pragma once

#include <Eigen/Core>

#include "viscoex/fluid.hpp"

namespace viscoex {

enum class DriveKind { step, constant, sinusoid };

/**
 * Prescribed loading, switched on at t = 0 (zero for t < 0).
 *
 * Stress-driven runs read the waveform as the stress P(t):
 *   step, constant  P = amplitude
 *   sinusoid        P = amplitude * cos(omega t + phase)
 *
 * Strain-driven runs read it as the strain s(t), except `constant`, which
 * prescribes a constant strain rate:
 *   step      s = amplitude
 *   constant  ds/dt = amplitude  (s = amplitude * t)
 *   sinusoid  s = amplitude * cos(omega t + phase)
 *
 * Any jump of the driven quantity at t = 0 is applied analytically, so the
 * first sample of a TimeSeries is the state at t = 0+.
 */
struct DriveSignal {
    DriveKind kind = DriveKind::step;
    double amplitude = 0.0;
    double omega = 0.0;
    double phase = 0.0;

    void validate() const;
};

/// Uniformly sampled stress/strain history; sample 0 is t = 0+.
struct TimeSeries {
    Eigen::VectorXd t;
    Eigen::VectorXd stress;
    Eigen::VectorXd strain;
    Eigen::VectorXd strain_rate;

    Eigen::Index size() const { return t.size(); }
    double dt() const { return t.size() > 1 ? t[1] - t[0] : 0.0; }
};

struct StepControl {
    double dt = 0.0;
    double horizon = 0.0;
    /// Largest accepted dt as a fraction of tau.
    double max_dt_over_tau = 0.1;

    /// dt = tau/1000 over 5 tau.
    static StepControl defaults_for(const FluidParams& params);
};

/// Integrates ds/dt = P/eta0 + (1/G0) dP/dt for a prescribed stress with fixed-step RK4.
TimeSeries integrate_stress_driven(const DriveSignal& drive, const FluidParams& params,
                                   const StepControl& control);

/// Integrates dP/dt = G0 ds/dt - P/tau for a prescribed strain with fixed-step RK4.
TimeSeries integrate_strain_driven(const DriveSignal& drive, const FluidParams& params,
                                   const StepControl& control);

/**
 * Strain-driven integration from a tabulated history (the `strain` and
 * `strain_rate` columns of `history`, uniform step, at least 4 samples).
 * Strain rate between samples is recovered by cubic interpolation.
 */
TimeSeries integrate_strain_driven(const TimeSeries& history, const FluidParams& params);

/**
 * Largest pointwise residual of ds/dt - P/eta0 - (1/G0) dP/dt, with both
 * derivatives taken by second-order finite differences of the stored
 * columns, normalized by the largest strain-rate scale in the series.
 * Returns 0 for an identically zero series.
 */
double maxwell_residual(const TimeSeries& series, const FluidParams& params);

}  // namespace viscoex
