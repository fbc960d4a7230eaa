#pragma once

#include <optional>
#include <vector>

#include "collectivity/dynamics.hpp"
#include "collectivity/spectral.hpp"

namespace collectivity {

/// Per-class excited-state amplitudes on the shared time grid.
/// columns[j][k] is beta at time index k for grid node j.
struct BetaMatrix {
    std::vector<double> times;
    std::vector<std::vector<complexd>> columns;  // one per grid node
};

/// One beta trajectory per grid node. Columns are bit-identical to
/// standalone integrate_two_level runs at the same detuning.
BetaMatrix ensemble_trajectories(const PulseShape& pulse, const QuadratureGrid& grid,
                                 double decay, double t_end, double dt);

/// p_e(t_k): weighted mean of per-class excited populations.
double excited_population(const BetaMatrix& betas, const QuadratureGrid& grid,
                          std::size_t time_index);

/// C(t_k) = |sum_j w_j beta_j|^2 / sum_j w_j |beta_j|^2. Empty optional when
/// the denominator is below 1e-30 (no excitation, conditioning impossible).
std::optional<double> collectivity(const BetaMatrix& betas, const QuadratureGrid& grid,
                                   std::size_t time_index);

struct SpectralProfile {
    std::vector<double> nodes;   // detunings, rad/us
    std::vector<double> values;  // n(Delta) |beta(t0, Delta)|^2, density peak 1
};

SpectralProfile spectral_contribution(const BetaMatrix& betas, const SpectralDistribution& dist,
                                      const QuadratureGrid& grid, std::size_t t0_index);

struct EnsembleParams {
    PulseShape pulse;
    SpectralDistribution dist;
    double decay = 0.0;  // rad/us
    double t_end = 0.5;  // us
    double dt = 1e-5;    // us
    std::size_t n_nodes = 401;
    double span_sigmas = 5.0;
    double t0_spectrum = 0.2;  // us
};

struct EnsembleResult {
    std::vector<double> times;
    std::vector<double> p_e;
    std::vector<double> collectivity;       // valid where defined[k]
    std::vector<unsigned char> defined;     // 1 where C is defined
    SpectralProfile spectrum;               // evaluated at t0_spectrum
    EnsembleParams params;
};

/// Full pipeline: grid, batch integration, p_e, C and the spectral profile.
/// Node integrations may run concurrently, but reductions are in node-index
/// order, so the output is bit-identical to a serial run.
EnsembleResult run_ensemble(const EnsembleParams& params);

}  // namespace collectivity
