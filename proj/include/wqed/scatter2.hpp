#pragma once

#include "wqed/liouville.hpp"

#include <vector>

namespace wqed {

// Coherent tone near the 0-1 transition of a two-level emitter on an
// infinite line. Gamma10 is the radiative (zero-temperature) rate; with a
// thermal occupation n the relaxation and excitation rates are Gamma10 (1+n)
// and Gamma10 n.
struct DriveSpec {
    double Nin = 0.0;      // photons / s
    double delta = 0.0;    // omega_p - omega_10, rad/s
    double Gamma10 = 0.0;  // rad/s
    double gamma10 = 0.0;  // coherence decay, rad/s
    double nTherm = 0.0;   // occupation at omega_10

    void validate() const;
};

struct ScatterResult {
    complex r{0.0, 0.0};
    complex t{1.0, 0.0};
    double R = 0.0;
    double T = 1.0;

    static ScatterResult from_reflection(complex r);
};

enum class Method { Analytic, Numeric };

// Rotating-frame amplitude <0|rho|1> for a drive Omega_p sin(omega_p t) volts.
complex analytic_rho01(const DriveSpec& d, double omega10, double Z0, double OmegaP);

// r = -r0 (1 - i delta/gamma10) / (1 + (delta/gamma10)^2 + 2 Nin/gamma10), r0 = Gamma10 / (2 gamma10)
ScatterResult analytic_rt(const DriveSpec& d);

// Rotating-frame generator: H = -delta |1><1| + (Omega_R/2) sigma_x,
// Gamma10(1+n) D(sigma-), Gamma10 n D(sigma+), residual pure dephasing on sigma_z.
SuperOperator two_level_liouvillian(const DriveSpec& d);

// Pure-dephasing rate gamma10 - (relax + excite)/2; ParameterError if negative.
double residual_dephasing(const DriveSpec& d);

DensityMatrix numeric_steady_state(const DriveSpec& d);

// r = i Gamma10 rho01 / Omega_R from the stationary state; t = 1 + r.
// Nin = 0 is evaluated in the linear-response limit.
ScatterResult numeric_rt(const DriveSpec& d);

std::vector<ScatterResult> sweep_two_level(const std::vector<double>& deltas, const DriveSpec& base, Method method);

} // namespace wqed
