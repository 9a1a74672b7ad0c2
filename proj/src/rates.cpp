#include "wqed/rates.hpp"

#include "wqed/constants.hpp"
#include "wqed/errors.hpp"

#include <cmath>

namespace wqed {

double thermal_occupation(double omega, double T) {
    if (!(omega > 0.0)) {
        throw ParameterError("thermal_occupation: omega must be positive");
    }
    if (!(T >= 0.0)) {
        throw ParameterError("thermal_occupation: temperature must be non-negative");
    }
    if (T == 0.0) {
        return 0.0;
    }
    const double x = constants::hbar * omega / (constants::kB * T);
    return 1.0 / std::expm1(x);
}

RateSet transition_rates(const TransmonSpectrum& spec, const DerivedParams& d, double T) {
    const int n = spec.nLevels;
    RateSet rates;
    rates.GammaDown = RMatrix::Zero(n, n);
    rates.GammaUp = RMatrix::Zero(n, n);
    rates.nTherm = RMatrix::Zero(n, n);
    const double prefactor = 2.0 * d.gamma / constants::hbar;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const double wij = spec.omega(i, j);
            if (wij == 0.0) {
                continue;
            }
            const double occ = thermal_occupation(std::abs(wij), T);
            const double me2 = std::norm(spec.chargeME(i, j));
            rates.nTherm(i, j) = occ;
            if (wij > 0.0) {
                rates.GammaDown(i, j) = prefactor * wij * (1.0 + occ) * me2;
            } else {
                rates.GammaUp(i, j) = prefactor * (-wij) * occ * me2;
            }
        }
    }
    rates.GammaPhi.resize(n);
    for (int k = 0; k < n; ++k) {
        rates.GammaPhi[k] = spec.epsilons.empty() ? 0.0 : pure_dephasing(spec, d, T, k);
    }
    rates.gammaTotal = dephasing_matrix(rates);
    return rates;
}

AsymptoticRates asymptotic_rates(int j, double kappa, double EJ, double Z0, double n) {
    if (j < 0) {
        throw ParameterError("asymptotic_rates: j must be non-negative");
    }
    const double base = constants::pi * (j + 1) * kappa * kappa * (EJ / constants::hbar) * (Z0 / constants::R_K);
    return {base * (1.0 + n), base * n};
}

double pure_dephasing(const TransmonSpectrum& spec, const DerivedParams& d, double T, int k) {
    if (!(T >= 0.0)) {
        throw ParameterError("pure_dephasing: temperature must be non-negative");
    }
    if (k < 0 || k >= static_cast<int>(spec.epsilons.size())) {
        throw ParameterError("pure_dephasing: level without a dispersion value");
    }
    const double slope = constants::pi * spec.epsilons[k] / constants::hbar * std::sin(constants::two_pi * d.ng);
    const double diagME = constants::e / (4.0 * d.EC) * constants::hbar * std::abs(slope);
    return 2.0 * d.gamma / constants::hbar * (constants::kB * T / constants::hbar) * diagME * diagME;
}

double max_pure_dephasing_closed_form(double kappa, double Z0, double T, double epsK, double EC) {
    const double ratio = epsK / EC;
    return kappa * kappa * (Z0 / constants::R_K) * (constants::kB * T / constants::hbar) *
           (constants::pi * constants::pi * constants::pi / 8.0) * ratio * ratio;
}

RMatrix dephasing_matrix(const RateSet& rates) {
    const int n = rates.levels();
    Eigen::VectorXd outflow = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (k != i) {
                outflow(i) += rates.transition(i, k);
            }
        }
    }
    RMatrix g = RMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const double phiI = rates.GammaPhi.empty() ? 0.0 : rates.GammaPhi[i];
            const double phiJ = rates.GammaPhi.empty() ? 0.0 : rates.GammaPhi[j];
            g(i, j) = phiI + phiJ + 0.5 * (outflow(i) + outflow(j));
        }
    }
    return g;
}

} // namespace wqed
