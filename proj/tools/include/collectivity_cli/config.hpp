#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "collectivity/ensemble.hpp"

namespace collectivity::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// User-facing run configuration. Frequencies are linear MHz here and are
/// multiplied by 2*pi exactly once, at the point of use, to get rad/us.
struct RunConfig {
    std::string pulse_kind = "gaussian";
    double pulse_peak_mhz = 1.0;
    double pulse_center_us = 0.2;
    double pulse_fwhm_us = 0.1;

    double sigma_fwhm_mhz = 500.0;
    std::vector<double> delta0_mhz = {0.0, 500.0, 750.0, 1000.0, 1250.0};
    std::vector<double> gamma_mhz = {0.0, 5.0};

    double t_end_us = 0.5;
    double dt_us = 1e-5;
    std::size_t n_nodes = 401;
    double span_sigmas = 5.0;
    double t0_spectrum_us = 0.2;
    std::size_t out_stride = 1;  // write every k-th time sample
    std::filesystem::path output_dir = ".";
    bool svg = false;
};

/// Parses a JSON config file. Every field is optional; unknown keys are
/// rejected with the offending name.
RunConfig load_config(const std::filesystem::path& path);

/// Validates ranges and cross-field constraints, throwing ConfigError with
/// the field name on failure.
void validate(const RunConfig& config);

/// One-line JSON rendering of the resolved config, embedded in output headers.
std::string resolved_json(const RunConfig& config);

double mhz_to_angular(double mhz);  // 2*pi*MHz -> rad/us

PulseShape make_pulse(const RunConfig& config);
SpectralDistribution make_distribution(const RunConfig& config, double delta0_mhz);
EnsembleParams make_ensemble_params(const RunConfig& config, double delta0_mhz,
                                    double gamma_mhz);

}  // namespace collectivity::cli
