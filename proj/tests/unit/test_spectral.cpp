#include <cmath>

#include "collectivity/spectral.hpp"
#include "doctest.h"

using namespace collectivity;

TEST_CASE("homogeneous limit is a single unit-weight class") {
    const SpectralDistribution dist{0.0, 2.0 * M_PI * 500.0};
    const auto grid = build_grid(dist, 1, 5.0);
    REQUIRE(grid.nodes.size() == 1);
    CHECK(grid.nodes[0] == 2.0 * M_PI * 500.0);
    CHECK(grid.weights[0] == 1.0);
}

TEST_CASE("default grid spans +-5 sigma_G with symmetric weights") {
    const double sigma = 2.0 * M_PI * 500.0;
    const SpectralDistribution dist{sigma, 0.0};
    const auto grid = build_grid(dist, 401, 5.0);
    REQUIRE(grid.nodes.size() == 401);

    const double sigma_g = sigma / (2.0 * std::sqrt(2.0 * M_LN2));
    CHECK(grid.nodes.front() == doctest::Approx(-5.0 * sigma_g).epsilon(1e-12));
    CHECK(grid.nodes.back() == doctest::Approx(5.0 * sigma_g).epsilon(1e-12));
    CHECK(grid.nodes.back() == doctest::Approx(2.0 * M_PI * 1061.65).epsilon(1e-4));

    double total = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        total += grid.weights[j];
        CHECK(grid.weights[j] >= 0.0);
        CHECK(std::abs(grid.weights[j] - grid.weights[grid.nodes.size() - 1 - j]) < 1e-14);
        if (j) CHECK(grid.nodes[j] > grid.nodes[j - 1]);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("center node carries the largest weight") {
    const SpectralDistribution dist{2.0 * M_PI * 500.0, 2.0 * M_PI * 1250.0};
    const auto grid = build_grid(dist, 3, 1.0);
    CHECK(grid.nodes[1] == 2.0 * M_PI * 1250.0);
    CHECK(grid.weights[1] > grid.weights[0]);
    CHECK(grid.weights[1] > grid.weights[2]);
}

TEST_CASE("grid construction rejects bad arguments") {
    const SpectralDistribution dist{2.0 * M_PI * 500.0, 0.0};
    CHECK_THROWS_AS(build_grid(dist, 400, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(dist, 0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(dist, 401, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(dist, 401, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(SpectralDistribution{0.0, 0.0}, 3, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(SpectralDistribution{-1.0, 0.0}, 3, 5.0), std::invalid_argument);
}

TEST_CASE("spectral density peaks at the distribution center") {
    const SpectralDistribution dist{2.0 * M_PI * 500.0, 2.0 * M_PI * 1250.0};
    CHECK(spectral_density(dist, 2.0 * M_PI * 1250.0) == 1.0);
    // half maximum one half-FWHM away
    CHECK(spectral_density(dist, 2.0 * M_PI * 1500.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spectral_density(dist, 0.0) < 0.02);

    const SpectralDistribution homogeneous{0.0, 1.0};
    CHECK(spectral_density(homogeneous, 1.0) == 1.0);
    CHECK(spectral_density(homogeneous, 1.1) == 0.0);
}
