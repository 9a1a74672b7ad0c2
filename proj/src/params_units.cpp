#include "wqed/params_units.hpp"

#include "wqed/constants.hpp"
#include "wqed/errors.hpp"

#include <cmath>
#include <string>

namespace wqed {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ParameterError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
    }
}

} // namespace

void CircuitParams::validate() const {
    require_positive(Cc, "Cc");
    require_positive(CJ, "CJ");
    require_positive(EJ, "EJ");
    require_positive(Z0, "Z0");
    if (!(T >= 0.0) || !std::isfinite(T)) {
        throw ParameterError("temperature must be non-negative, got " + std::to_string(T));
    }
    if (!std::isfinite(VDC)) {
        throw ParameterError("VDC must be finite");
    }
    if (nPorts < 1) {
        throw ParameterError("nPorts must be at least 1, got " + std::to_string(nPorts));
    }
}

DerivedParams derive_params(const CircuitParams& p) {
    p.validate();
    using constants::e;
    DerivedParams d;
    d.CSigma = p.Cc + p.CJ;
    d.EC = e * e / (2.0 * d.CSigma);
    d.kappa = p.Cc / d.CSigma;
    const double zEff = p.Z0 / p.nPorts;
    d.gamma = zEff * d.kappa * d.kappa;
    d.tauRC = zEff * p.Cc * p.CJ / d.CSigma;
    d.ng = p.Cc * p.VDC / (2.0 * e);
    d.CJ = p.CJ;
    d.nPorts = p.nPorts;
    return d;
}

PortMapping map_ports(const DerivedParams& d, int n) {
    if (n < 1) {
        throw ParameterError("port count must be at least 1, got " + std::to_string(n));
    }
    if (d.nPorts < 1) {
        throw ParameterError("derived parameters carry an invalid port count");
    }
    const double rescale = static_cast<double>(d.nPorts) / n;
    PortMapping m;
    m.nPorts = n;
    m.inWeight = 1.0 / n;
    m.selfReflection = 2.0 / n - 1.0;
    m.crossTransmission = 2.0 / n;
    m.gamma = d.gamma * rescale;
    m.tauRC = d.tauRC * rescale;
    m.emissionWeight = d.CJ > 0.0 ? m.tauRC / d.CJ : 0.0;
    return m;
}

Watts to_watts(DBm p) { return Watts{std::pow(10.0, p.value / 10.0) * 1e-3}; }

DBm to_dbm(Watts p) {
    if (!(p.value > 0.0)) {
        throw ParameterError("dBm is undefined for non-positive power");
    }
    return DBm{10.0 * std::log10(p.value / 1e-3)};
}

double power_to_flux(Watts p, double omega) {
    if (!(omega > 0.0)) {
        throw ParameterError("angular frequency must be positive");
    }
    if (!(p.value >= 0.0)) {
        throw ParameterError("power must be non-negative");
    }
    return p.value / (constants::hbar * omega);
}

double power_to_flux(DBm p, double omega) { return power_to_flux(to_watts(p), omega); }

Watts flux_to_power(double flux, double omega) {
    if (!(omega > 0.0)) {
        throw ParameterError("angular frequency must be positive");
    }
    if (!(flux >= 0.0)) {
        throw ParameterError("photon flux must be non-negative");
    }
    return Watts{flux * constants::hbar * omega};
}

double flux_to_rabi(double Nin, double Gamma) {
    if (!(Nin >= 0.0)) {
        throw ParameterError("photon flux must be non-negative");
    }
    if (!(Gamma > 0.0)) {
        throw ParameterError("relaxation rate must be positive");
    }
    return std::sqrt(2.0 * Gamma * Nin);
}

double flux_to_voltage_amplitude(double Nin, double omega, double Z0) {
    if (!(Nin >= 0.0) || !(omega > 0.0) || !(Z0 > 0.0)) {
        throw ParameterError("flux_to_voltage_amplitude: invalid arguments");
    }
    return std::sqrt(2.0 * Z0 * constants::hbar * omega * Nin);
}

double voltage_amplitude_to_flux(double amplitude, double omega, double Z0) {
    if (!(omega > 0.0) || !(Z0 > 0.0)) {
        throw ParameterError("voltage_amplitude_to_flux: invalid arguments");
    }
    return amplitude * amplitude / (2.0 * Z0 * constants::hbar * omega);
}

} // namespace wqed
