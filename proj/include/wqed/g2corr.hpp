#pragma once

#include "wqed/liouville.hpp"

#include <vector>

namespace wqed {

enum class OutputField { Reflected, Transmitted };

// Thermal factor on the filter-resonator dissipators: HalfOccupation uses n/2,
// FullOccupation the conventional n.
enum class ResonatorThermalFactor { HalfOccupation, FullOccupation };

// Resonantly driven two-level emitter whose output is detected through a
// single-mode filter resonator of energy-decay rate gammaBW. Gamma10 is the
// radiative rate at T = 0; at temperature T the emitter relaxes at
// Gamma10 (1 + n) and is excited at Gamma10 n with n the occupation at omega10.
struct G2Config {
    OutputField field = OutputField::Reflected;
    bool filtered = true;
    double gammaBW = 0.0;  // rad/s
    int nFock = 8;
    bool autoFock = true;  // double nFock until g2(0) is converged to 1e-3
    double T = 0.0;        // K
    double Gamma10 = 0.0;  // rad/s
    double omega10 = 0.0;  // rad/s
    double Nin = 0.0;      // photons / s
    std::vector<double> tauGrid;  // s
    ResonatorThermalFactor thermalFactor = ResonatorThermalFactor::HalfOccupation;

    void validate() const;
};

// 400 points over [0, 200 ns].
std::vector<double> default_tau_grid();

// Filter-resonator (x) emitter generator in the frame rotating at omega10.
// Joint basis index = 2 * fock + qubit.
SuperOperator build_cascaded_liouvillian(const G2Config& cfg);

// Joint-space operators for the same basis.
Operator cascaded_annihilator(int nFock);
Operator cascaded_sigma_minus(int nFock);

// Bare emitter generator (no filter) for the unfiltered reflected field.
SuperOperator emitter_liouvillian(const G2Config& cfg);

// Smallest nFock (starting from cfg.nFock, doubling) with
// |g2(0; n) - g2(0; n + 2)| < 1e-3. TruncationError past 64.
int converged_fock_dimension(const G2Config& cfg);

double g2_zero_filtered(const G2Config& cfg, int nFock);

G2Curve g2_filtered(const G2Config& cfg);
G2Curve g2_unfiltered(const G2Config& cfg);

} // namespace wqed
