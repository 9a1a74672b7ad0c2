#include "wqed/scatter3.hpp"

#include "wqed/constants.hpp"
#include "wqed/errors.hpp"
#include "wqed/params_units.hpp"
#include "wqed/parallel.hpp"

#include <array>
#include <cmath>
#include <string>

namespace wqed {

namespace {

constexpr double kLinearResponseFlux = 1e-12;  // relative to gamma10, see scatter2

double probe_flux(const ThreeLevelDrive& d) { return d.NinP > 0.0 ? d.NinP : kLinearResponseFlux * d.gamma10; }

// Per-level pure dephasing phi_k solving gamma_ij - (out_i + out_j)/2 = phi_i + phi_j.
std::array<double, 3> level_dephasing(const ThreeLevelDrive& d) {
    const double out0 = d.Gamma10 * d.nTherm10;
    const double out1 = d.Gamma10 * (1.0 + d.nTherm10) + d.Gamma21 * d.nTherm21;
    const double out2 = d.Gamma21 * (1.0 + d.nTherm21);
    const double e10 = d.gamma10 - 0.5 * (out1 + out0);
    const double e20 = d.gamma20 - 0.5 * (out2 + out0);
    const double e21 = d.gamma21 - 0.5 * (out2 + out1);
    std::array<double, 3> phi{0.5 * (e10 + e20 - e21), 0.5 * (e10 + e21 - e20), 0.5 * (e20 + e21 - e10)};
    const double tol = 1e-12 * std::max({d.gamma10, d.gamma20, d.gamma21});
    for (int k = 0; k < 3; ++k) {
        if (phi[k] < -tol) {
            throw ParameterError("ThreeLevelDrive: decoherence rates imply negative pure dephasing on level " +
                                 std::to_string(k));
        }
        phi[k] = std::max(phi[k], 0.0);
    }
    return phi;
}

} // namespace

void ThreeLevelDrive::validate() const {
    if (!(NinP >= 0.0) || !(NinC >= 0.0)) {
        throw ParameterError("ThreeLevelDrive: photon fluxes must be non-negative");
    }
    if (!std::isfinite(deltaP) || !std::isfinite(deltaC)) {
        throw ParameterError("ThreeLevelDrive: detunings must be finite");
    }
    if (!(Gamma10 > 0.0) || !(Gamma21 > 0.0)) {
        throw ParameterError("ThreeLevelDrive: radiative rates must be positive");
    }
    if (!(nTherm10 >= 0.0) || !(nTherm21 >= 0.0)) {
        throw ParameterError("ThreeLevelDrive: thermal occupations must be non-negative");
    }
    level_dephasing(*this);
}

ThreeLevelDrive ThreeLevelDrive::without_pure_dephasing(double Gamma10, double NinP, double NinC) {
    ThreeLevelDrive d;
    d.NinP = NinP;
    d.NinC = NinC;
    d.Gamma10 = Gamma10;
    d.Gamma21 = 2.0 * Gamma10;
    d.gamma10 = 0.5 * d.Gamma10;
    d.gamma20 = 0.5 * d.Gamma21;
    d.gamma21 = 0.5 * (d.Gamma10 + d.Gamma21);
    return d;
}

ThreeLevelModel rotating_frame_3lvl(const ThreeLevelDrive& d) {
    d.validate();
    ThreeLevelModel m;
    m.OmegaP = flux_to_rabi(probe_flux(d), d.Gamma10);
    m.OmegaC = flux_to_rabi(d.NinC, d.Gamma21);

    const Operator s1m = ket_bra(3, 0, 1);
    const Operator s2m = ket_bra(3, 1, 2);
    const Operator s1x = s1m + s1m.adjoint();
    const Operator s2x = s2m + s2m.adjoint();
    m.H = -d.deltaP * ket_bra(3, 1, 1) - (d.deltaP + d.deltaC) * ket_bra(3, 2, 2) + 0.5 * m.OmegaP * s1x +
          0.5 * m.OmegaC * s2x;

    const auto phi = level_dephasing(d);
    m.terms = {
        {d.Gamma10 * (1.0 + d.nTherm10), s1m},
        {d.Gamma10 * d.nTherm10, s1m.adjoint()},
        {d.Gamma21 * (1.0 + d.nTherm21), s2m},
        {d.Gamma21 * d.nTherm21, s2m.adjoint()},
    };
    // D(P_k) at rate 2 phi_k damps rho_ij (i != j) at phi_i + phi_j.
    for (int k = 0; k < 3; ++k) {
        m.terms.push_back({2.0 * phi[k], ket_bra(3, k, k)});
    }
    return m;
}

complex analytic_rho10_first_order(const ThreeLevelDrive& d, const LadderCircuit& c) {
    d.validate();
    if (!(c.omega10 > 0.0) || !(c.omega21 > 0.0) || !(c.Z0 > 0.0)) {
        throw ParameterError("analytic_rho10_first_order: circuit frequencies and impedance must be positive");
    }
    const double OmegaP = flux_to_voltage_amplitude(d.NinP, c.omega10, c.Z0);
    const double OmegaC = flux_to_voltage_amplitude(d.NinC, c.omega21, c.Z0);
    const double hw21Z = constants::hbar * c.omega21 * c.Z0;
    const complex twoPhoton(d.gamma20, -(d.deltaC + d.deltaP));
    const complex num =
        -2.0 * I * hw21Z * std::sqrt(d.Gamma10 / (constants::hbar * c.omega10 * c.Z0)) * twoPhoton * OmegaP;
    const complex den = 4.0 * hw21Z * complex(d.gamma10, -d.deltaP) * twoPhoton + d.Gamma21 * OmegaC * OmegaC;
    return num / den;
}

ScatterResult analytic_r_probe(const ThreeLevelDrive& d) {
    d.validate();
    if (d.deltaC != 0.0) {
        throw UnsupportedError("analytic_r_probe: closed form requires a resonant control (deltaC = 0); "
                               "use the numeric path");
    }
    const double G10 = d.Gamma10;
    const double G21 = d.Gamma21;
    const double g10 = d.gamma10;
    const double g20 = d.gamma20;
    const double dp = d.deltaP;
    const double nc = d.NinC;
    const complex num = 2.0 * G10 * (g20 * g20 + dp * dp) * complex(g10, -dp) + G10 * G21 * complex(g20, dp) * nc;
    const double den = 4.0 * (g10 * g10 + dp * dp) * (g20 * g20 + dp * dp) + 4.0 * G21 * (g10 * g20 - dp * dp) * nc +
                       G21 * G21 * nc * nc;
    return ScatterResult::from_reflection(-num / den);
}

DensityMatrix numeric_steady_state(const ThreeLevelDrive& d) {
    const ThreeLevelModel m = rotating_frame_3lvl(d);
    return steady_state(build_liouvillian(m.H, m.terms));
}

complex numeric_rho10(const ThreeLevelDrive& d) { return numeric_steady_state(d)(1, 0); }

ScatterResult numeric_r_probe(const ThreeLevelDrive& d) {
    const ThreeLevelModel m = rotating_frame_3lvl(d);
    const DensityMatrix rho = steady_state(build_liouvillian(m.H, m.terms));
    return ScatterResult::from_reflection(I * d.Gamma10 * rho(0, 1) / m.OmegaP);
}

ScatterResult numeric_r_control(const ThreeLevelDrive& d) {
    if (!(d.NinC > 0.0)) {
        throw DivisionDomainError("numeric_r_control: control flux vanishes");
    }
    const ThreeLevelModel m = rotating_frame_3lvl(d);
    const DensityMatrix rho = steady_state(build_liouvillian(m.H, m.terms));
    return ScatterResult::from_reflection(I * d.Gamma21 * rho(1, 2) / m.OmegaC);
}

std::vector<ThreeLevelRecord> sweep_three_level(const std::vector<double>& deltaPs, const std::vector<double>& NinCs,
                                                const ThreeLevelDrive& base, Method method) {
    std::vector<ThreeLevelRecord> out(deltaPs.size() * NinCs.size());
    parallel_for(out.size(), [&](std::size_t idx) {
        ThreeLevelDrive d = base;
        d.deltaP = deltaPs[idx % deltaPs.size()];
        d.NinC = NinCs[idx / deltaPs.size()];
        out[idx].deltaP = d.deltaP;
        out[idx].NinC = d.NinC;
        out[idx].probe = method == Method::Analytic ? analytic_r_probe(d) : numeric_r_probe(d);
    });
    return out;
}

} // namespace wqed
