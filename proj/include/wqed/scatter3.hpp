#pragma once

#include "wqed/liouville.hpp"
#include "wqed/scatter2.hpp"

#include <vector>

namespace wqed {

// Probe near 0-1 and control near 1-2 of a three-level ladder.
// Gamma10 and Gamma21 are radiative rates; thermal occupations n10, n21
// scale them as in the two-level case.
struct ThreeLevelDrive {
    double NinP = 0.0;     // probe photons / s
    double NinC = 0.0;     // control photons / s
    double deltaP = 0.0;   // omega_p - omega_10, rad/s
    double deltaC = 0.0;   // omega_c - omega_21, rad/s
    double Gamma10 = 0.0;
    double Gamma21 = 0.0;
    double gamma10 = 0.0;
    double gamma20 = 0.0;
    double gamma21 = 0.0;
    double nTherm10 = 0.0;
    double nTherm21 = 0.0;

    void validate() const;

    // Gamma21 = 2 Gamma10 and decoherence without pure dephasing at T = 0:
    // gamma10 = Gamma10/2, gamma20 = Gamma21/2, gamma21 = (Gamma10 + Gamma21)/2.
    static ThreeLevelDrive without_pure_dephasing(double Gamma10, double NinP, double NinC);
};

struct ThreeLevelModel {
    Operator H;  // rad/s, rotating frame
    std::vector<CollapseTerm> terms;
    double OmegaP = 0.0;  // probe Rabi, rad/s
    double OmegaC = 0.0;  // control Rabi, rad/s
};

ThreeLevelModel rotating_frame_3lvl(const ThreeLevelDrive& d);

// Line context needed to express the drive amplitudes in volts.
struct LadderCircuit {
    double omega10 = 0.0;
    double omega21 = 0.0;
    double Z0 = 0.0;
};

// First order in Omega_p / Omega_c; rotating-frame <1|rho|0>.
complex analytic_rho10_first_order(const ThreeLevelDrive& d, const LadderCircuit& c);

// Probe reflection for resonant control. UnsupportedError when deltaC != 0.
ScatterResult analytic_r_probe(const ThreeLevelDrive& d);

DensityMatrix numeric_steady_state(const ThreeLevelDrive& d);
complex numeric_rho10(const ThreeLevelDrive& d);

// Probe part only: r = i Gamma10 rho01 / Omega_p. The control-frequency
// component is returned separately by numeric_r_control.
ScatterResult numeric_r_probe(const ThreeLevelDrive& d);
ScatterResult numeric_r_control(const ThreeLevelDrive& d);

struct ThreeLevelRecord {
    double deltaP = 0.0;
    double NinC = 0.0;
    ScatterResult probe;
};

// Outer product of the grids, deltaP fastest.
std::vector<ThreeLevelRecord> sweep_three_level(const std::vector<double>& deltaPs,
                                                const std::vector<double>& NinCs,
                                                const ThreeLevelDrive& base, Method method);

} // namespace wqed
