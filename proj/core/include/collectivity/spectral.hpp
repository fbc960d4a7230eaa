#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace collectivity {

/// Gaussian distribution of atomic detunings from the write laser,
/// centered at center_offset with the given FWHM. fwhm = 0 denotes the
/// homogeneous (single-class) limit.
struct SpectralDistribution {
    double fwhm = 0.0;           // rad/us, >= 0
    double center_offset = 0.0;  // rad/us (laser detuning from distribution center)

    void validate() const {
        if (fwhm < 0.0) throw std::invalid_argument("SpectralDistribution: fwhm must be >= 0");
    }
};

/// Unnormalized density with peak value 1 at center_offset. In the
/// homogeneous limit returns 1 at the center and 0 elsewhere.
double spectral_density(const SpectralDistribution& dist, double delta);

/// Discretization of the spectral integral. Weights absorb n(Delta) dDelta / N
/// and sum to 1, so the atom number never appears downstream.
struct QuadratureGrid {
    std::vector<double> nodes;    // detunings, strictly increasing
    std::vector<double> weights;  // non-negative, sum = 1
};

/// Uniform nodes over center_offset +- span_sigmas * sigma_G with
/// sigma_G = fwhm / (2 sqrt(2 ln2)); weights are renormalized Gaussian
/// density samples (midpoint rule). n_nodes must be odd so the center is
/// a node; the homogeneous limit requires n_nodes = 1.
QuadratureGrid build_grid(const SpectralDistribution& dist, std::size_t n_nodes,
                          double span_sigmas);

}  // namespace collectivity
