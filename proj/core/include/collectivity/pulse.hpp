#pragma once

#include <stdexcept>

namespace collectivity {

enum class PulseKind { gaussian, constant };

/// Time-dependent Rabi frequency of the write laser.
/// All angular frequencies are in rad/us, times in us.
struct PulseShape {
    PulseKind kind = PulseKind::gaussian;
    double peak_rabi = 0.0;  // rad/us, >= 0
    double center = 0.0;     // us (gaussian only)
    double fwhm = 0.0;       // us, > 0 (gaussian only)

    void validate() const {
        if (peak_rabi < 0.0)
            throw std::invalid_argument("PulseShape: peak_rabi must be >= 0");
        if (kind == PulseKind::gaussian && !(fwhm > 0.0))
            throw std::invalid_argument("PulseShape: fwhm must be > 0 for gaussian pulse");
    }
};

/// Omega(t). Gaussian: peak * exp(-4 ln2 (t-center)^2 / fwhm^2).
double rabi_at(const PulseShape& pulse, double t);

/// Integral of Omega over [t0, t1]; error-function closed form for the
/// gaussian shape, exact rectangle for the constant one.
double pulse_area(const PulseShape& pulse, double t0, double t1);

}  // namespace collectivity
