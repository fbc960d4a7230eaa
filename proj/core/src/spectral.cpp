#include "collectivity/spectral.hpp"

#include <cmath>

namespace collectivity {

double spectral_density(const SpectralDistribution& dist, double delta) {
    dist.validate();
    const double x = delta - dist.center_offset;
    if (dist.fwhm == 0.0) return x == 0.0 ? 1.0 : 0.0;
    return std::exp(-4.0 * M_LN2 * x * x / (dist.fwhm * dist.fwhm));
}

QuadratureGrid build_grid(const SpectralDistribution& dist, std::size_t n_nodes,
                          double span_sigmas) {
    dist.validate();
    if (n_nodes < 1) throw std::invalid_argument("build_grid: n_nodes must be >= 1");
    if (n_nodes % 2 == 0) throw std::invalid_argument("build_grid: n_nodes must be odd");
    if (!(span_sigmas > 0.0)) throw std::invalid_argument("build_grid: span_sigmas must be > 0");
    if (dist.fwhm == 0.0 && n_nodes != 1)
        throw std::invalid_argument("build_grid: homogeneous limit (fwhm = 0) requires n_nodes = 1");

    QuadratureGrid grid;
    grid.nodes.resize(n_nodes);
    grid.weights.resize(n_nodes);

    if (n_nodes == 1) {
        grid.nodes[0] = dist.center_offset;
        grid.weights[0] = 1.0;
        return grid;
    }

    const double sigma_g = dist.fwhm / (2.0 * std::sqrt(2.0 * M_LN2));
    const double spacing = 2.0 * span_sigmas * sigma_g / static_cast<double>(n_nodes - 1);
    const auto half = static_cast<std::ptrdiff_t>((n_nodes - 1) / 2);

    // Offsets are built symmetrically about the center node so the grid is
    // exactly mirror-symmetric in floating point.
    double total = 0.0;
    for (std::size_t k = 0; k < n_nodes; ++k) {
        const double offset = static_cast<double>(static_cast<std::ptrdiff_t>(k) - half) * spacing;
        grid.nodes[k] = dist.center_offset + offset;
        const double w =
            std::exp(-4.0 * M_LN2 * offset * offset / (dist.fwhm * dist.fwhm));
        grid.weights[k] = w;
        total += w;
    }
    for (double& w : grid.weights) w /= total;
    return grid;
}

}  // namespace collectivity
