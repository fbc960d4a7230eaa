#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "collectivity/pulse.hpp"

namespace collectivity {

using complexd = std::complex<double>;

/// One spectral class: detuning from the write laser and amplitude decay
/// rate of the excited state (the population decays at twice this rate).
struct AtomParams {
    double detuning = 0.0;  // rad/us, any sign
    double decay = 0.0;     // rad/us, >= 0

    void validate() const {
        if (decay < 0.0) throw std::invalid_argument("AtomParams: decay must be >= 0");
    }
};

/// Ground/excited amplitudes alpha(t), beta(t) on a uniform time grid.
struct AmplitudeTrajectory {
    std::vector<double> times;     // times[k] = k * dt
    std::vector<complexd> alpha;   // alpha[0] = 1
    std::vector<complexd> beta;    // beta[0] = 0
};

/// Rabi frequency sampled on the half-step grid t_j = j * dt/2,
/// j = 0 .. 2*n_steps. Shared across spectral classes so that a batch run
/// is bit-identical to standalone single-atom runs.
struct RabiTable {
    double dt = 0.0;
    std::vector<double> omega;  // size 2*n_steps + 1

    std::size_t n_steps() const { return (omega.size() - 1) / 2; }
};

/// Validates (t_end, dt) and returns the step count. dt must divide t_end
/// within 1e-9 on the final grid point.
std::size_t step_count(double t_end, double dt);

RabiTable tabulate_rabi(const PulseShape& pulse, double t_end, double dt);

/// Fixed-step classical RK4 on
///   d(alpha)/dt = -i Omega(t) beta
///   d(beta)/dt  = -i Omega(t) alpha - (i Delta + Gamma) beta
/// with alpha(0) = 1, beta(0) = 0. Deterministic: identical inputs give
/// bit-identical trajectories.
AmplitudeTrajectory integrate_two_level(const RabiTable& table, const AtomParams& atom);

AmplitudeTrajectory integrate_two_level(const PulseShape& pulse, const AtomParams& atom,
                                        double t_end, double dt);

/// Beta-only variant used by the ensemble batch path (alpha is discarded).
std::vector<complexd> integrate_beta(const RabiTable& table, const AtomParams& atom);

}  // namespace collectivity
