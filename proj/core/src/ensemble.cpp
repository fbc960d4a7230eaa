#include "collectivity/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace collectivity {

namespace {

constexpr double kDefinedThreshold = 1e-30;

std::size_t worker_count(std::size_t n_jobs) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t n = hw == 0 ? 1 : hw;
    return n_jobs < n ? n_jobs : n;
}

/// Runs fn(j) for j in [0, n) on a small thread pool. Results are collected
/// per index, so callers can reduce them in deterministic order.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t j = 0; j < n; ++j) fn(j);
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&] {
            for (std::size_t j = next.fetch_add(1); j < n; j = next.fetch_add(1)) fn(j);
        }));
    }
    for (auto& f : futures) f.get();
}

void check_alignment(const BetaMatrix& betas, const QuadratureGrid& grid,
                     std::size_t time_index) {
    if (betas.columns.size() != grid.nodes.size() ||
        grid.nodes.size() != grid.weights.size())
        throw std::invalid_argument("ensemble: beta matrix and grid shapes differ");
    if (time_index >= betas.times.size())
        throw std::invalid_argument("ensemble: time index out of range");
    for (const auto& col : betas.columns)
        if (col.size() != betas.times.size())
            throw std::invalid_argument("ensemble: ragged beta matrix");
}

}  // namespace

BetaMatrix ensemble_trajectories(const PulseShape& pulse, const QuadratureGrid& grid,
                                 double decay, double t_end, double dt) {
    const RabiTable table = tabulate_rabi(pulse, t_end, dt);
    BetaMatrix betas;
    betas.times.resize(table.n_steps() + 1);
    for (std::size_t k = 0; k < betas.times.size(); ++k)
        betas.times[k] = static_cast<double>(k) * dt;
    betas.columns.resize(grid.nodes.size());
    parallel_for(grid.nodes.size(), [&](std::size_t j) {
        betas.columns[j] = integrate_beta(table, AtomParams{grid.nodes[j], decay});
    });
    return betas;
}

double excited_population(const BetaMatrix& betas, const QuadratureGrid& grid,
                          std::size_t time_index) {
    check_alignment(betas, grid, time_index);
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j)
        sum += grid.weights[j] * std::norm(betas.columns[j][time_index]);
    return sum;
}

std::optional<double> collectivity(const BetaMatrix& betas, const QuadratureGrid& grid,
                                   std::size_t time_index) {
    check_alignment(betas, grid, time_index);
    complexd coherent(0.0, 0.0);
    double incoherent = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        const complexd b = betas.columns[j][time_index];
        coherent += grid.weights[j] * b;
        incoherent += grid.weights[j] * std::norm(b);
    }
    if (incoherent < kDefinedThreshold) return std::nullopt;
    return std::norm(coherent) / incoherent;
}

SpectralProfile spectral_contribution(const BetaMatrix& betas, const SpectralDistribution& dist,
                                      const QuadratureGrid& grid, std::size_t t0_index) {
    check_alignment(betas, grid, t0_index);
    SpectralProfile profile;
    profile.nodes = grid.nodes;
    profile.values.resize(grid.nodes.size());
    for (std::size_t j = 0; j < grid.nodes.size(); ++j)
        profile.values[j] =
            spectral_density(dist, grid.nodes[j]) * std::norm(betas.columns[j][t0_index]);
    return profile;
}

EnsembleResult run_ensemble(const EnsembleParams& params) {
    const QuadratureGrid grid = build_grid(params.dist, params.n_nodes, params.span_sigmas);
    const RabiTable table = tabulate_rabi(params.pulse, params.t_end, params.dt);
    const std::size_t n_times = table.n_steps() + 1;
    const std::size_t n_nodes = grid.nodes.size();

    EnsembleResult result;
    result.params = params;
    result.times.resize(n_times);
    for (std::size_t k = 0; k < n_times; ++k)
        result.times[k] = static_cast<double>(k) * params.dt;

    const auto t0_index = static_cast<std::size_t>(
        std::llround(params.t0_spectrum / params.dt));
    if (t0_index >= n_times)
        throw std::invalid_argument("run_ensemble: t0_spectrum outside the time grid");

    // Trajectories are integrated in parallel blocks but accumulated strictly
    // in node-index order, matching the serial reduction bit for bit.
    std::vector<complexd> coherent(n_times, complexd(0.0, 0.0));
    std::vector<double> incoherent(n_times, 0.0);
    result.spectrum.nodes = grid.nodes;
    result.spectrum.values.resize(n_nodes);

    const std::size_t block = 4 * worker_count(n_nodes);
    std::vector<std::vector<complexd>> scratch(block);
    for (std::size_t begin = 0; begin < n_nodes; begin += block) {
        const std::size_t count = std::min(block, n_nodes - begin);
        parallel_for(count, [&](std::size_t i) {
            scratch[i] = integrate_beta(table, AtomParams{grid.nodes[begin + i], params.decay});
        });
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = begin + i;
            const double w = grid.weights[j];
            const std::vector<complexd>& beta = scratch[i];
            for (std::size_t k = 0; k < n_times; ++k) {
                coherent[k] += w * beta[k];
                incoherent[k] += w * std::norm(beta[k]);
            }
            result.spectrum.values[j] =
                spectral_density(params.dist, grid.nodes[j]) * std::norm(beta[t0_index]);
        }
    }

    result.p_e.resize(n_times);
    result.collectivity.assign(n_times, 0.0);
    result.defined.assign(n_times, 0);
    for (std::size_t k = 0; k < n_times; ++k) {
        result.p_e[k] = incoherent[k];
        if (!std::isfinite(result.p_e[k]) || !std::isfinite(std::abs(coherent[k])))
            throw std::runtime_error("run_ensemble: non-finite amplitude");
        if (incoherent[k] >= kDefinedThreshold) {
            result.collectivity[k] = std::norm(coherent[k]) / incoherent[k];
            result.defined[k] = 1;
        }
    }
    return result;
}

}  // namespace collectivity
