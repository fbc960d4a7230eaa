#include "collectivity/pulse.hpp"

#include <cmath>

namespace collectivity {

double rabi_at(const PulseShape& pulse, double t) {
    if (pulse.kind == PulseKind::constant) return pulse.peak_rabi;
    const double x = t - pulse.center;
    return pulse.peak_rabi * std::exp(-4.0 * M_LN2 * x * x / (pulse.fwhm * pulse.fwhm));
}

double pulse_area(const PulseShape& pulse, double t0, double t1) {
    if (pulse.kind == PulseKind::constant) return pulse.peak_rabi * (t1 - t0);
    // int exp(-a x^2) dx = sqrt(pi/a)/2 * erf(sqrt(a) x), a = 4 ln2 / fwhm^2
    const double sqrt_a = 2.0 * std::sqrt(M_LN2) / pulse.fwhm;
    const double prefactor = 0.5 * pulse.peak_rabi * 0.5 * pulse.fwhm * std::sqrt(M_PI / M_LN2);
    return prefactor *
           (std::erf(sqrt_a * (t1 - pulse.center)) - std::erf(sqrt_a * (t0 - pulse.center)));
}

}  // namespace collectivity
