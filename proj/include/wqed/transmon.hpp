#pragma once

#include "wqed/linalg.hpp"

#include <vector>

namespace wqed {

// Voltage-biased Cooper-pair box in the Cooper-pair number basis
// |m>, m = -nCut..nCut. Energies in joules, charge in coulombs.
struct ChargeBasisModel {
    Operator H;  // 4 EC (m - ng)^2 on the diagonal, -EJ/2 on the first off-diagonals
    Operator X;  // charge operator 2e (m - ng)
    int nCut = 0;
};

struct TransmonSpectrum {
    std::vector<double> omegas;   // rad/s, omegas[0] == 0
    Operator chargeME;            // <i|X|j>, C
    std::vector<double> epsilons; // charge dispersion per level, J (closed form)
    double groundEnergy = 0.0;    // absolute ground energy, J
    int nLevels = 0;
    int nCut = 0;

    double omega(int i, int j) const { return omegas.at(i) - omegas.at(j); }
};

// Smallest cutoff accepted by build_charge_hamiltonian.
int minimum_charge_cutoff(double EC, double EJ);
// max(10, ceil(4 + sqrt(EJ/EC)) + 5)
int default_charge_cutoff(double EC, double EJ);

ChargeBasisModel build_charge_hamiltonian(double EC, double EJ, double ng, int nCut);

// Sorted spectrum of H with matrix elements of X between the lowest nLevels
// eigenstates. Each eigenvector is rephased so that its largest-magnitude
// component is real and positive.
TransmonSpectrum diagonalize(const Operator& H, const Operator& X, int nLevels);

// Full pipeline: build, diagonalize, attach closed-form dispersions.
// nCut <= 0 selects default_charge_cutoff.
TransmonSpectrum solve_transmon(double EC, double EJ, double ng, int nLevels, int nCut = 0);

// Peak-to-peak charge dispersion of level k (asymptotic, EJ >> EC), J.
double charge_dispersion(double EC, double EJ, int k);

// omega_k(ng) = omega_k(1/4) - (eps_k / 2 hbar) cos(2 pi ng), absolute level
// energy over hbar with omega_k(1/4) from exact diagonalization.
double spectrum_vs_ng(double EC, double EJ, int k, double ng);

// d omega_k / d ng of the cosine approximation, rad/s.
double dispersion_slope(double EC, double EJ, int k, double ng);

} // namespace wqed
