#include "collectivity_cli/commands.hpp"

#include <cmath>
#include <numbers>

#include "collectivity_cli/csv.hpp"
#include "collectivity_cli/svg_plot.hpp"

namespace collectivity::cli {

namespace fs = std::filesystem;

namespace {

const char* kUnits = "units: frequencies linear MHz (angular rad/us = 2*pi*MHz), times us";

std::string header_comment(const std::string& command, const RunConfig& config) {
    return "collectivity-sim " + command + "; " + kUnits + "; config=" + resolved_json(config);
}

fs::path ensure_output_dir(const RunConfig& config) {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + config.output_dir.string());
    return config.output_dir;
}

void check_finite(const complexd& v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericError(std::string("non-finite amplitude in ") + what);
}

std::vector<const char*> palette() {
    return {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};
}

Series pulse_series(const RunConfig& config, double scale, bool squared) {
    const PulseShape pulse = make_pulse(config);
    Series s;
    s.label = squared ? "Omega^2 (scaled)" : "Omega(t) (scaled)";
    s.color = "#60a0ff";
    const int n = 500;
    double peak = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = config.t_end_us * i / n;
        const double om = rabi_at(pulse, t);
        s.x.push_back(t);
        s.y.push_back(squared ? om * om : om);
        peak = std::max(peak, s.y.back());
    }
    if (peak > 0.0)
        for (double& y : s.y) y *= scale / peak;
    return s;
}

struct CellResult {
    double delta0_mhz = 0.0;
    double gamma_mhz = 0.0;
    EnsembleResult result;
};

std::vector<CellResult> run_cells(const RunConfig& config) {
    std::vector<CellResult> cells;
    for (double d0 : config.delta0_mhz)
        for (double g : config.gamma_mhz) {
            CellResult cell{d0, g, {}};
            try {
                cell.result = run_ensemble(make_ensemble_params(config, d0, g));
            } catch (const std::runtime_error& e) {
                throw NumericError(e.what());
            }
            cells.push_back(std::move(cell));
        }
    return cells;
}

fs::path write_ensemble_csv(const RunConfig& config, const CellResult& cell,
                            const fs::path& dir) {
    const fs::path path = dir / ("ensemble_d" + format_compact(cell.delta0_mhz) + "_g" +
                                 format_compact(cell.gamma_mhz) + ".csv");
    CsvWriter csv(path, header_comment("ensemble", config), "t_us,p_e,collectivity,defined_flag");
    const EnsembleResult& r = cell.result;
    for (std::size_t k = 0; k < r.times.size(); k += config.out_stride)
        csv.row({format_sci(r.times[k]), format_sci(r.p_e[k]),
                 format_sci(r.defined[k] ? r.collectivity[k] : 0.0),
                 r.defined[k] ? "1" : "0"});
    csv.close();
    return path;
}

fs::path write_spectrum_csv(const RunConfig& config, const CellResult& cell,
                            const fs::path& dir) {
    const fs::path path = dir / ("spectrum_d" + format_compact(cell.delta0_mhz) + "_g" +
                                 format_compact(cell.gamma_mhz) + ".csv");
    CsvWriter csv(path, header_comment("spectrum", config), "delta_MHz,n_times_beta2");
    const SpectralProfile& profile = cell.result.spectrum;
    for (std::size_t j = 0; j < profile.nodes.size(); ++j)
        csv.row({format_sci(profile.nodes[j] / (2.0 * std::numbers::pi)),
                 format_sci(profile.values[j])});
    csv.close();
    return path;
}

}  // namespace

std::vector<fs::path> cmd_single(const RunConfig& config) {
    validate(config);
    const fs::path dir = ensure_output_dir(config);
    const PulseShape pulse = make_pulse(config);
    const double gamma = mhz_to_angular(config.gamma_mhz.front());

    std::vector<fs::path> written;
    std::vector<Series> curves;
    auto colors = palette();
    for (std::size_t i = 0; i < config.delta0_mhz.size(); ++i) {
        const double delta_mhz = config.delta0_mhz[i];
        const AtomParams atom{mhz_to_angular(delta_mhz), gamma};
        const AmplitudeTrajectory traj =
            integrate_two_level(pulse, atom, config.t_end_us, config.dt_us);

        const fs::path path = dir / ("single_" + format_compact(delta_mhz) + ".csv");
        CsvWriter csv(path, header_comment("single", config),
                      "t_us,abs_beta,re_beta,im_beta,re_alpha,im_alpha");
        Series curve;
        curve.label = "Delta=" + format_compact(delta_mhz) + " MHz";
        curve.color = colors[i % colors.size()];
        for (std::size_t k = 0; k < traj.times.size(); k += config.out_stride) {
            check_finite(traj.alpha[k], "single-atom trajectory");
            check_finite(traj.beta[k], "single-atom trajectory");
            // abs_beta is derived from the quantized re/im parts so a reader
            // recomputing it from the file reproduces the column exactly.
            const double re_b = quantize(traj.beta[k].real());
            const double im_b = quantize(traj.beta[k].imag());
            csv.row({format_sci(traj.times[k]), format_sci(std::hypot(re_b, im_b)),
                     format_sci(traj.beta[k].real()), format_sci(traj.beta[k].imag()),
                     format_sci(traj.alpha[k].real()), format_sci(traj.alpha[k].imag())});
            curve.x.push_back(traj.times[k]);
            curve.y.push_back(std::abs(traj.beta[k]));
        }
        csv.close();
        written.push_back(path);
        curves.push_back(std::move(curve));
    }

    if (config.svg) {
        double peak = 0.0;
        for (const Series& c : curves)
            for (double y : c.y) peak = std::max(peak, y);
        curves.push_back(pulse_series(config, peak > 0.0 ? peak : 1.0, false));

        PlotSpec spec;
        spec.comment = header_comment("single", config);
        spec.title = "Excited-state amplitude |beta(t)|";
        spec.x_label = "t (us)";
        spec.y_label = "|beta|";
        const fs::path path = dir / "single.svg";
        write_line_plot(path, spec, curves);
        written.push_back(path);
    }
    return written;
}

std::vector<fs::path> cmd_ensemble(const RunConfig& config) {
    validate(config);
    const fs::path dir = ensure_output_dir(config);
    const std::vector<CellResult> cells = run_cells(config);

    std::vector<fs::path> written;
    for (const CellResult& cell : cells) written.push_back(write_ensemble_csv(config, cell, dir));

    if (config.svg) {
        std::vector<Series> pe_curves, c_curves;
        auto colors = palette();
        std::size_t i = 0;
        for (const CellResult& cell : cells) {
            Series pe, cc;
            pe.label = cc.label = "d0=" + format_compact(cell.delta0_mhz) + ", g=" +
                                  format_compact(cell.gamma_mhz) + " MHz";
            pe.color = cc.color = colors[(i / config.gamma_mhz.size()) % colors.size()];
            pe.dashed = cc.dashed = cell.gamma_mhz != config.gamma_mhz.front();
            for (std::size_t k = 0; k < cell.result.times.size(); k += config.out_stride) {
                pe.x.push_back(cell.result.times[k]);
                pe.y.push_back(cell.result.p_e[k]);
                if (cell.result.defined[k]) {
                    cc.x.push_back(cell.result.times[k]);
                    cc.y.push_back(cell.result.collectivity[k]);
                }
            }
            pe_curves.push_back(std::move(pe));
            c_curves.push_back(std::move(cc));
            ++i;
        }

        PlotSpec pe_spec;
        pe_spec.comment = header_comment("ensemble", config);
        pe_spec.title = "Average excited-state population p_e(t)";
        pe_spec.x_label = "t (us)";
        pe_spec.y_label = "p_e";
        pe_spec.y_log = true;
        double pe_max = 0.0;
        for (const Series& s : pe_curves)
            for (double y : s.y) pe_max = std::max(pe_max, y);
        pe_curves.push_back(pulse_series(config, pe_max > 0.0 ? pe_max : 1.0, true));
        const fs::path pe_path = dir / "ensemble_pe.svg";
        write_line_plot(pe_path, pe_spec, pe_curves);
        written.push_back(pe_path);

        PlotSpec c_spec;
        c_spec.comment = header_comment("ensemble", config);
        c_spec.title = "Collectivity C(t_S)";
        c_spec.x_label = "t_S (us)";
        c_spec.y_label = "C";
        c_curves.push_back(pulse_series(config, 1.0, true));
        const fs::path c_path = dir / "ensemble_collectivity.svg";
        write_line_plot(c_path, c_spec, c_curves);
        written.push_back(c_path);
    }
    return written;
}

std::vector<fs::path> cmd_spectrum(const RunConfig& config) {
    validate(config);
    const fs::path dir = ensure_output_dir(config);
    const std::vector<CellResult> cells = run_cells(config);

    std::vector<fs::path> written;
    for (const CellResult& cell : cells) written.push_back(write_spectrum_csv(config, cell, dir));

    if (config.svg) {
        std::vector<Series> curves;
        auto colors = palette();
        std::size_t i = 0;
        for (const CellResult& cell : cells) {
            Series s;
            s.label = "d0=" + format_compact(cell.delta0_mhz) + ", g=" +
                      format_compact(cell.gamma_mhz) + " MHz";
            s.color = colors[(i / config.gamma_mhz.size()) % colors.size()];
            s.dashed = cell.gamma_mhz != config.gamma_mhz.front();
            for (std::size_t j = 0; j < cell.result.spectrum.nodes.size(); ++j) {
                s.x.push_back(cell.result.spectrum.nodes[j] / (2.0 * std::numbers::pi));
                s.y.push_back(cell.result.spectrum.values[j]);
            }
            curves.push_back(std::move(s));
            ++i;
        }
        PlotSpec spec;
        spec.comment = header_comment("spectrum", config);
        spec.title = "Spectral contribution n(Delta)|beta(t0,Delta)|^2";
        spec.x_label = "Delta (MHz)";
        spec.y_label = "n |beta|^2 (arb.)";
        spec.y_log = true;
        const fs::path path = dir / "spectrum.svg";
        write_line_plot(path, spec, curves);
        written.push_back(path);
    }
    return written;
}

std::vector<fs::path> cmd_sweep(const RunConfig& config) {
    validate(config);
    const fs::path dir = ensure_output_dir(config);
    const std::vector<CellResult> cells = run_cells(config);

    std::vector<fs::path> written;
    for (const CellResult& cell : cells) {
        written.push_back(write_ensemble_csv(config, cell, dir));
        written.push_back(write_spectrum_csv(config, cell, dir));
    }

    const auto center_index = static_cast<std::size_t>(
        std::llround(config.pulse_center_us / config.dt_us));
    const fs::path summary = dir / "summary.csv";
    CsvWriter csv(summary, header_comment("sweep", config),
                  "delta0_MHz,gamma_MHz,C_at_pulse_center,p_e_max");
    for (const CellResult& cell : cells) {
        const EnsembleResult& r = cell.result;
        const std::size_t ci = std::min(center_index, r.times.size() - 1);
        double pe_max = 0.0;
        for (double v : r.p_e) pe_max = std::max(pe_max, v);
        csv.row({format_compact(cell.delta0_mhz), format_compact(cell.gamma_mhz),
                 format_sci(r.defined[ci] ? r.collectivity[ci] : 0.0), format_sci(pe_max)});
    }
    csv.close();
    written.push_back(summary);
    return written;
}

}  // namespace collectivity::cli
