#include "wqed/scatter2.hpp"

#include "wqed/constants.hpp"
#include "wqed/errors.hpp"
#include "wqed/params_units.hpp"
#include "wqed/parallel.hpp"

#include <cmath>
#include <string>

namespace wqed {

namespace {

// Probe flux used for Nin = 0, relative to gamma10. Its saturation
// contribution 2 Nin / gamma10 is below double-precision noise in r.
constexpr double kLinearResponseFlux = 1e-12;

const Operator& sigma_minus() {
    static const Operator s = ket_bra(2, 0, 1);
    return s;
}
const Operator& sigma_plus() {
    static const Operator s = ket_bra(2, 1, 0);
    return s;
}

double effective_flux(const DriveSpec& d) { return d.Nin > 0.0 ? d.Nin : kLinearResponseFlux * d.gamma10; }

} // namespace

void DriveSpec::validate() const {
    if (!(Nin >= 0.0) || !std::isfinite(Nin)) {
        throw ParameterError("DriveSpec: photon flux must be non-negative");
    }
    if (!std::isfinite(delta)) {
        throw ParameterError("DriveSpec: detuning must be finite");
    }
    if (!(Gamma10 > 0.0)) {
        throw ParameterError("DriveSpec: Gamma10 must be positive");
    }
    if (!(nTherm >= 0.0)) {
        throw ParameterError("DriveSpec: thermal occupation must be non-negative");
    }
    if (!(gamma10 >= 0.5 * Gamma10 * (1.0 - 1e-12))) {
        throw ParameterError("DriveSpec: gamma10 must be at least Gamma10/2");
    }
}

ScatterResult ScatterResult::from_reflection(complex r) {
    ScatterResult s;
    s.r = r;
    s.t = 1.0 + r;
    s.R = std::norm(s.r);
    s.T = std::norm(s.t);
    return s;
}

complex analytic_rho01(const DriveSpec& d, double omega10, double Z0, double OmegaP) {
    d.validate();
    if (!(omega10 > 0.0) || !(Z0 > 0.0)) {
        throw ParameterError("analytic_rho01: omega10 and Z0 must be positive");
    }
    const double hwZ = constants::hbar * omega10 * Z0;
    const complex num = 0.5 * std::sqrt(hwZ * d.Gamma10) * complex(d.delta, d.gamma10) * OmegaP;
    const double den = hwZ * d.gamma10 * d.gamma10 + hwZ * d.delta * d.delta + d.gamma10 * OmegaP * OmegaP;
    return num / den;
}

ScatterResult analytic_rt(const DriveSpec& d) {
    d.validate();
    const double r0 = d.Gamma10 / (2.0 * d.gamma10);
    const double x = d.delta / d.gamma10;
    const complex r = -r0 * complex(1.0, -x) / (1.0 + x * x + 2.0 * d.Nin / d.gamma10);
    return ScatterResult::from_reflection(r);
}

double residual_dephasing(const DriveSpec& d) {
    const double relax = d.Gamma10 * (1.0 + d.nTherm);
    const double excite = d.Gamma10 * d.nTherm;
    const double phi = d.gamma10 - 0.5 * (relax + excite);
    if (phi < -1e-12 * d.gamma10) {
        throw ParameterError("gamma10 = " + std::to_string(d.gamma10) +
                             " is below half the total transition rate " + std::to_string(0.5 * (relax + excite)));
    }
    return std::max(phi, 0.0);
}

SuperOperator two_level_liouvillian(const DriveSpec& d) {
    d.validate();
    const double rabi = flux_to_rabi(effective_flux(d), d.Gamma10);
    const Operator sx = sigma_plus() + sigma_minus();
    const Operator sz = ket_bra(2, 0, 0) - ket_bra(2, 1, 1);
    const Operator H = -d.delta * ket_bra(2, 1, 1) + 0.5 * rabi * sx;
    const double phi = residual_dephasing(d);
    const std::vector<CollapseTerm> terms{
        {d.Gamma10 * (1.0 + d.nTherm), sigma_minus()},
        {d.Gamma10 * d.nTherm, sigma_plus()},
        {0.5 * phi, sz},
    };
    return build_liouvillian(H, terms);
}

DensityMatrix numeric_steady_state(const DriveSpec& d) { return steady_state(two_level_liouvillian(d)); }

ScatterResult numeric_rt(const DriveSpec& d) {
    const DensityMatrix rho = numeric_steady_state(d);
    const double rabi = flux_to_rabi(effective_flux(d), d.Gamma10);
    const complex r = I * d.Gamma10 * rho(0, 1) / rabi;
    return ScatterResult::from_reflection(r);
}

std::vector<ScatterResult> sweep_two_level(const std::vector<double>& deltas, const DriveSpec& base, Method method) {
    std::vector<ScatterResult> out(deltas.size());
    parallel_for(deltas.size(), [&](std::size_t i) {
        DriveSpec d = base;
        d.delta = deltas[i];
        out[i] = method == Method::Analytic ? analytic_rt(d) : numeric_rt(d);
    });
    return out;
}

} // namespace wqed
