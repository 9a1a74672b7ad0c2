#pragma once

// Circuit parameters of a Cooper-pair box capacitively coupled to one or more
// semi-infinite transmission lines, and the unit conversions used at the
// boundary of the library.
//
// Unit convention: every frequency and rate is an angular frequency in rad/s.
// Energies are accepted in joules and converted to E / hbar internally.

namespace wqed {

struct CircuitParams {
    double Cc = 0.0;   // coupling capacitance, F
    double CJ = 0.0;   // junction capacitance, F
    double EJ = 0.0;   // Josephson energy, J
    double Z0 = 0.0;   // line impedance, ohm
    double T = 0.0;    // temperature, K
    double VDC = 0.0;  // DC bias, V
    int nPorts = 1;    // number of semi-infinite lines meeting at the island

    // Throws ParameterError when an invariant is violated.
    void validate() const;
};

struct DerivedParams {
    double CSigma = 0.0;  // F
    double EC = 0.0;      // J, e^2 / (2 C_Sigma)
    double gamma = 0.0;   // ohm, (Z0/N) (Cc/C_Sigma)^2
    double tauRC = 0.0;   // s, (Z0/N) Cc CJ / C_Sigma
    double ng = 0.0;      // Cc VDC / (2e)
    double kappa = 0.0;   // Cc / C_Sigma
    double CJ = 0.0;      // F, carried for the output-field weight
    int nPorts = 1;
};

DerivedParams derive_params(const CircuitParams& p);

// Input-output weights for N symmetric ports:
//   Phi_in   = (1/N) sum_n Phi_in_n
//   Phi_out_n = (2/N - 1) Phi_in_n + (tauRC/CJ) p_J + (2/N) sum_{m != n} Phi_in_m
struct PortMapping {
    int nPorts = 1;
    double inWeight = 1.0;
    double selfReflection = 1.0;
    double crossTransmission = 2.0;
    double emissionWeight = 0.0;  // tauRC / CJ, ohm
    double gamma = 0.0;           // ohm
    double tauRC = 0.0;           // s
};

// Rescales gamma and tauRC from d.nPorts to n ports.
PortMapping map_ports(const DerivedParams& d, int n);

struct Watts {
    double value = 0.0;
};
struct DBm {
    double value = 0.0;
};

Watts to_watts(DBm p);
DBm to_dbm(Watts p);

// Photon flux (1/s) of a monochromatic tone at angular frequency omega.
double power_to_flux(Watts p, double omega);
double power_to_flux(DBm p, double omega);
Watts flux_to_power(double flux, double omega);

// Rabi angular frequency of a transition with radiative rate Gamma driven by
// a coherent tone carrying Nin photons per second: Omega_R^2 = 2 Gamma Nin.
double flux_to_rabi(double Nin, double Gamma);

// Amplitude (V) of the incoming voltage tone Omega sin(omega t) that carries
// Nin photons per second on a line of impedance Z0, Nin = Omega^2/(2 Z0 hbar omega).
double flux_to_voltage_amplitude(double Nin, double omega, double Z0);
double voltage_amplitude_to_flux(double amplitude, double omega, double Z0);

} // namespace wqed
