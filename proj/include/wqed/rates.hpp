#pragma once

#include "wqed/linalg.hpp"
#include "wqed/params_units.hpp"
#include "wqed/transmon.hpp"

#include <vector>

namespace wqed {

// Rates are indexed (i, j) for the transition |i> -> |j>.
struct RateSet {
    RMatrix GammaDown;              // omega_ij > 0, rad/s
    RMatrix GammaUp;                // omega_ij < 0, rad/s
    std::vector<double> GammaPhi;   // pure dephasing of level k, rad/s
    RMatrix gammaTotal;             // coherence decay of rho_ij, rad/s, zero diagonal
    RMatrix nTherm;                 // Bose occupation at |omega_ij|

    int levels() const { return static_cast<int>(GammaDown.rows()); }
    double transition(int i, int j) const { return GammaDown(i, j) + GammaUp(i, j); }
};

// 1 / (exp(hbar omega / kB T) - 1); zero at T = 0.
double thermal_occupation(double omega, double T);

// Relaxation, excitation and pure dephasing rates for every pair of retained
// levels, and the resulting coherence decay matrix.
RateSet transition_rates(const TransmonSpectrum& spec, const DerivedParams& d, double T);

struct AsymptoticRates {
    double relax = 0.0;   // Gamma_{(j+1) j}
    double excite = 0.0;  // Gamma_{j (j+1)}
};

// Transmon-limit closed forms
//   Gamma_{(j+1)j} = pi (j+1) kappa^2 (EJ/hbar) (Z0/R_K) (1 + n)
//   Gamma_{j(j+1)} = pi (j+1) kappa^2 (EJ/hbar) (Z0/R_K) n
AsymptoticRates asymptotic_rates(int j, double kappa, double EJ, double Z0, double n);

// (2 gamma / hbar)(kB T / hbar) |<k|X|k>|^2 with |<k|X|k>| = (e / 4EC) hbar |d omega_k / d ng|
// taken from the cosine dispersion of level k at the bias point d.ng.
double pure_dephasing(const TransmonSpectrum& spec, const DerivedParams& d, double T, int k);

// kappa^2 (Z0/R_K)(kB T/hbar)(pi^3/8) |eps_k / EC|^2
double max_pure_dephasing_closed_form(double kappa, double Z0, double T, double epsK, double EC);

// gamma_ij = GammaPhi_i + GammaPhi_j + (sum_{k != i} Gamma_ik + sum_{k != j} Gamma_jk) / 2
RMatrix dephasing_matrix(const RateSet& rates);

} // namespace wqed
