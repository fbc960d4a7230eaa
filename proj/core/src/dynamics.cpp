#include "collectivity/dynamics.hpp"

#include <cmath>

namespace collectivity {

std::size_t step_count(double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_two_level: dt must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("integrate_two_level: t_end must be > 0");
    if (dt > t_end) throw std::invalid_argument("integrate_two_level: dt must not exceed t_end");
    const double steps = t_end / dt;
    const auto n = static_cast<std::size_t>(std::llround(steps));
    if (n < 1 || std::abs(static_cast<double>(n) * dt - t_end) > 1e-9)
        throw std::invalid_argument("integrate_two_level: dt must divide t_end");
    return n;
}

RabiTable tabulate_rabi(const PulseShape& pulse, double t_end, double dt) {
    pulse.validate();
    const std::size_t n = step_count(t_end, dt);
    RabiTable table;
    table.dt = dt;
    table.omega.resize(2 * n + 1);
    const double half_dt = 0.5 * dt;
    for (std::size_t j = 0; j < table.omega.size(); ++j)
        table.omega[j] = rabi_at(pulse, static_cast<double>(j) * half_dt);
    return table;
}

AmplitudeTrajectory integrate_two_level(const RabiTable& table, const AtomParams& atom) {
    atom.validate();
    const std::size_t n = table.n_steps();
    const double dt = table.dt;

    AmplitudeTrajectory traj;
    traj.times.resize(n + 1);
    traj.alpha.resize(n + 1);
    traj.beta.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) traj.times[k] = static_cast<double>(k) * dt;

    const complexd minus_i(0.0, -1.0);
    const complexd lambda(-atom.decay, -atom.detuning);  // -(Gamma + i*Delta)

    complexd a(1.0, 0.0);
    complexd b(0.0, 0.0);
    traj.alpha[0] = a;
    traj.beta[0] = b;

    for (std::size_t k = 0; k < n; ++k) {
        const double om0 = table.omega[2 * k];
        const double om_mid = table.omega[2 * k + 1];
        const double om1 = table.omega[2 * k + 2];

        const complexd k1a = minus_i * om0 * b;
        const complexd k1b = minus_i * om0 * a + lambda * b;

        complexd at = a + 0.5 * dt * k1a;
        complexd bt = b + 0.5 * dt * k1b;
        const complexd k2a = minus_i * om_mid * bt;
        const complexd k2b = minus_i * om_mid * at + lambda * bt;

        at = a + 0.5 * dt * k2a;
        bt = b + 0.5 * dt * k2b;
        const complexd k3a = minus_i * om_mid * bt;
        const complexd k3b = minus_i * om_mid * at + lambda * bt;

        at = a + dt * k3a;
        bt = b + dt * k3b;
        const complexd k4a = minus_i * om1 * bt;
        const complexd k4b = minus_i * om1 * at + lambda * bt;

        a += (dt / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        b += (dt / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        traj.alpha[k + 1] = a;
        traj.beta[k + 1] = b;
    }
    return traj;
}

AmplitudeTrajectory integrate_two_level(const PulseShape& pulse, const AtomParams& atom,
                                        double t_end, double dt) {
    return integrate_two_level(tabulate_rabi(pulse, t_end, dt), atom);
}

std::vector<complexd> integrate_beta(const RabiTable& table, const AtomParams& atom) {
    return std::move(integrate_two_level(table, atom).beta);
}

}  // namespace collectivity
