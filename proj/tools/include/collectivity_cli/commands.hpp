#pragma once

#include <filesystem>
#include <vector>

#include "collectivity_cli/config.hpp"

namespace collectivity::cli {

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Single-atom trajectories, one file per detuning in delta0_mhz
/// (gamma taken from the first gamma_mhz entry).
std::vector<std::filesystem::path> cmd_single(const RunConfig& config);

/// p_e(t) and C(t) per (delta0, gamma) cell.
std::vector<std::filesystem::path> cmd_ensemble(const RunConfig& config);

/// Spectral contribution profile n(Delta)|beta(t0,Delta)|^2 per cell.
std::vector<std::filesystem::path> cmd_spectrum(const RunConfig& config);

/// Ensemble + spectrum over the full delta0 x gamma grid plus summary.csv.
std::vector<std::filesystem::path> cmd_sweep(const RunConfig& config);

}  // namespace collectivity::cli
