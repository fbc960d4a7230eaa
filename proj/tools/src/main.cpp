#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "collectivity_cli/commands.hpp"
#include "collectivity_cli/csv.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericError = 3;
constexpr int kExitIoError = 4;

}  // namespace

int main(int argc, char** argv) {
    using namespace collectivity::cli;

    CLI::App app{"Collectivity of spontaneous-Raman atomic excitations in "
                 "inhomogeneously broadened ensembles"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<double> delta0, gamma;
    std::size_t nodes = 0;
    double dt = 0.0;
    std::string out_dir;
    bool svg = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--delta0", delta0, "Detuning list, MHz")->delimiter(',');
        cmd->add_option("--gamma", gamma, "Decay rate list, MHz")->delimiter(',');
        cmd->add_option("--nodes", nodes, "Quadrature node count (odd)");
        cmd->add_option("--dt", dt, "Integrator step, us");
        cmd->add_option("--out", out_dir, "Output directory");
        cmd->add_flag("--svg", svg, "Also emit SVG plots");
    };

    CLI::App* single = app.add_subcommand("single", "Single-atom trajectories (Fig. 2 style)");
    CLI::App* ensemble = app.add_subcommand("ensemble", "p_e(t) and C(t_S) per (delta0, gamma)");
    CLI::App* spectrum = app.add_subcommand("spectrum", "Spectral contribution profiles");
    CLI::App* sweep = app.add_subcommand("sweep", "Full delta0 x gamma sweep plus summary.csv");
    for (CLI::App* cmd : {single, ensemble, spectrum, sweep}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) config = load_config(config_path);
        if (!delta0.empty()) config.delta0_mhz = delta0;
        if (!gamma.empty()) config.gamma_mhz = gamma;
        if (nodes != 0) config.n_nodes = nodes;
        if (dt != 0.0) config.dt_us = dt;
        if (!out_dir.empty()) config.output_dir = out_dir;
        if (svg) config.svg = true;

        std::vector<std::filesystem::path> written;
        if (*single) written = cmd_single(config);
        if (*ensemble) written = cmd_ensemble(config);
        if (*spectrum) written = cmd_spectrum(config);
        if (*sweep) written = cmd_sweep(config);
        for (const auto& path : written) std::printf("wrote %s\n", path.string().c_str());
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumericError;
    } catch (const IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIoError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumericError;
    }
}
