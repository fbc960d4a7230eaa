#include "collectivity_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace collectivity::cli {

using nlohmann::json;

double mhz_to_angular(double mhz) { return 2.0 * M_PI * mhz; }

namespace {

template <typename T>
void read_field(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field '") + key + "': " + e.what());
    }
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "pulse_kind", "pulse_peak_mhz", "pulse_center_us", "pulse_fwhm_us",
        "sigma_fwhm_mhz", "delta0_mhz", "gamma_mhz", "t_end_us", "dt_us",
        "n_nodes", "span_sigmas", "t0_spectrum_us", "out_stride", "output_dir", "svg"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");

    RunConfig config;
    read_field(j, "pulse_kind", config.pulse_kind);
    read_field(j, "pulse_peak_mhz", config.pulse_peak_mhz);
    read_field(j, "pulse_center_us", config.pulse_center_us);
    read_field(j, "pulse_fwhm_us", config.pulse_fwhm_us);
    read_field(j, "sigma_fwhm_mhz", config.sigma_fwhm_mhz);
    read_field(j, "delta0_mhz", config.delta0_mhz);
    read_field(j, "gamma_mhz", config.gamma_mhz);
    read_field(j, "t_end_us", config.t_end_us);
    read_field(j, "dt_us", config.dt_us);
    read_field(j, "n_nodes", config.n_nodes);
    read_field(j, "span_sigmas", config.span_sigmas);
    read_field(j, "t0_spectrum_us", config.t0_spectrum_us);
    read_field(j, "out_stride", config.out_stride);
    std::string dir;
    read_field(j, "output_dir", dir);
    if (!dir.empty()) config.output_dir = dir;
    read_field(j, "svg", config.svg);
    return config;
}

void validate(const RunConfig& config) {
    if (config.pulse_kind != "gaussian" && config.pulse_kind != "constant")
        throw ConfigError("pulse_kind: must be 'gaussian' or 'constant'");
    if (config.pulse_peak_mhz < 0.0) throw ConfigError("pulse_peak_mhz: must be >= 0");
    if (config.pulse_kind == "gaussian" && !(config.pulse_fwhm_us > 0.0))
        throw ConfigError("pulse_fwhm_us: must be > 0");
    if (config.sigma_fwhm_mhz < 0.0) throw ConfigError("sigma_fwhm_mhz: must be >= 0");
    if (config.delta0_mhz.empty()) throw ConfigError("delta0_mhz: list must not be empty");
    if (config.gamma_mhz.empty()) throw ConfigError("gamma_mhz: list must not be empty");
    for (double g : config.gamma_mhz)
        if (g < 0.0) throw ConfigError("gamma_mhz: entries must be >= 0");
    if (!(config.t_end_us > 0.0)) throw ConfigError("t_end_us: must be > 0");
    if (!(config.dt_us > 0.0) || config.dt_us > config.t_end_us)
        throw ConfigError("dt_us: must satisfy 0 < dt_us <= t_end_us");
    if (config.n_nodes < 1 || config.n_nodes % 2 == 0)
        throw ConfigError("n_nodes: must be an odd count >= 1");
    if (config.sigma_fwhm_mhz == 0.0 && config.n_nodes != 1)
        throw ConfigError("n_nodes: must be 1 when sigma_fwhm_mhz is 0");
    if (!(config.span_sigmas > 0.0)) throw ConfigError("span_sigmas: must be > 0");
    if (config.t0_spectrum_us < 0.0 || config.t0_spectrum_us > config.t_end_us)
        throw ConfigError("t0_spectrum_us: must lie within [0, t_end_us]");
    if (config.out_stride < 1) throw ConfigError("out_stride: must be >= 1");
}

std::string resolved_json(const RunConfig& config) {
    json j;
    j["pulse_kind"] = config.pulse_kind;
    j["pulse_peak_mhz"] = config.pulse_peak_mhz;
    j["pulse_center_us"] = config.pulse_center_us;
    j["pulse_fwhm_us"] = config.pulse_fwhm_us;
    j["sigma_fwhm_mhz"] = config.sigma_fwhm_mhz;
    j["delta0_mhz"] = config.delta0_mhz;
    j["gamma_mhz"] = config.gamma_mhz;
    j["t_end_us"] = config.t_end_us;
    j["dt_us"] = config.dt_us;
    j["n_nodes"] = config.n_nodes;
    j["span_sigmas"] = config.span_sigmas;
    j["t0_spectrum_us"] = config.t0_spectrum_us;
    j["out_stride"] = config.out_stride;
    j["svg"] = config.svg;
    return j.dump();
}

PulseShape make_pulse(const RunConfig& config) {
    PulseShape pulse;
    pulse.kind = config.pulse_kind == "constant" ? PulseKind::constant : PulseKind::gaussian;
    pulse.peak_rabi = mhz_to_angular(config.pulse_peak_mhz);
    pulse.center = config.pulse_center_us;
    pulse.fwhm = config.pulse_fwhm_us;
    return pulse;
}

SpectralDistribution make_distribution(const RunConfig& config, double delta0_mhz) {
    return SpectralDistribution{mhz_to_angular(config.sigma_fwhm_mhz),
                                mhz_to_angular(delta0_mhz)};
}

EnsembleParams make_ensemble_params(const RunConfig& config, double delta0_mhz,
                                    double gamma_mhz) {
    EnsembleParams params;
    params.pulse = make_pulse(config);
    params.dist = make_distribution(config, delta0_mhz);
    params.decay = mhz_to_angular(gamma_mhz);
    params.t_end = config.t_end_us;
    params.dt = config.dt_us;
    params.n_nodes = config.n_nodes;
    params.span_sigmas = config.span_sigmas;
    params.t0_spectrum = config.t0_spectrum_us;
    return params;
}

}  // namespace collectivity::cli
