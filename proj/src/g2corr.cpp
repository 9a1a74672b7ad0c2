#include "wqed/g2corr.hpp"

#include "wqed/errors.hpp"
#include "wqed/rates.hpp"

#include <cmath>
#include <string>

namespace wqed {

namespace {

constexpr int kMaxFock = 64;
constexpr double kFockTolerance = 1e-3;

double occupation(const G2Config& cfg) { return thermal_occupation(cfg.omega10, cfg.T); }

} // namespace

void G2Config::validate() const {
    if (!(Gamma10 > 0.0)) {
        throw ParameterError("G2Config: Gamma10 must be positive");
    }
    if (!(omega10 > 0.0)) {
        throw ParameterError("G2Config: omega10 must be positive");
    }
    if (!(Nin >= 0.0)) {
        throw ParameterError("G2Config: photon flux must be non-negative");
    }
    if (!(T >= 0.0)) {
        throw ParameterError("G2Config: temperature must be non-negative");
    }
    if (filtered) {
        if (nFock < 2) {
            throw ParameterError("G2Config: nFock must be at least 2 with a filter");
        }
        if (!(gammaBW > 0.0)) {
            throw ParameterError("G2Config: filter bandwidth must be positive");
        }
    }
    for (std::size_t i = 0; i < tauGrid.size(); ++i) {
        if (!(tauGrid[i] >= 0.0) || (i > 0 && !(tauGrid[i] > tauGrid[i - 1]))) {
            throw ParameterError("G2Config: tau grid must be non-negative and ascending");
        }
    }
}

std::vector<double> default_tau_grid() {
    constexpr int points = 400;
    constexpr double span = 200e-9;
    std::vector<double> taus(points);
    for (int i = 0; i < points; ++i) {
        taus[i] = span * i / (points - 1);
    }
    return taus;
}

Operator cascaded_annihilator(int nFock) { return kron(destroy(nFock), Operator::Identity(2, 2)); }

Operator cascaded_sigma_minus(int nFock) { return kron(Operator::Identity(nFock, nFock), ket_bra(2, 0, 1)); }

SuperOperator build_cascaded_liouvillian(const G2Config& cfg) {
    cfg.validate();
    if (!cfg.filtered) {
        throw ParameterError("build_cascaded_liouvillian: configuration has no filter");
    }
    const int dim = 2 * cfg.nFock;
    const double n = occupation(cfg);
    const double relax = cfg.Gamma10 * (1.0 + n);   // Gamma_10
    const double excite = cfg.Gamma10 * n;          // Gamma_01
    const double filterN = cfg.thermalFactor == ResonatorThermalFactor::HalfOccupation ? 0.5 * n : n;

    const Operator id = Operator::Identity(dim, dim);
    const Operator a = cascaded_annihilator(cfg.nFock);
    const Operator ad = a.adjoint();
    const Operator sm = cascaded_sigma_minus(cfg.nFock);
    const Operator sp = sm.adjoint();

    // i sqrt(Gamma_10 Nin / (2(n+1))) [rho, sigma_x] == -i [H, rho]
    const Operator H = std::sqrt(relax * cfg.Nin / (2.0 * (n + 1.0))) * (sp + sm);

    const std::vector<CollapseTerm> terms{
        {relax, sm},
        {excite, sp},
        {cfg.gammaBW * (filterN + 1.0), a},
        {cfg.gammaBW * filterN, ad},
    };

    std::vector<SuperOperator> extra;
    // (i/2) sqrt(Gamma_10 (n+1) gammaBW) ([a, rho sigma+] + [a^dag, sigma- rho])
    {
        const SuperOperator aRhoSp = sandwich_terms(a, sp) - sandwich_terms(id, sp * a);
        const SuperOperator adSmRho = sandwich_terms(ad * sm, id) - sandwich_terms(sm, ad);
        extra.push_back(complex(0.0, 0.5 * std::sqrt(relax * (n + 1.0) * cfg.gammaBW)) * (aRhoSp + adSmRho));
    }
    // (i/2) sqrt(Gamma_01 n gammaBW) ([sigma+ rho, a] + [rho sigma-, a^dag])
    if (excite > 0.0) {
        const SuperOperator spRhoA = sandwich_terms(sp, a) - sandwich_terms(a * sp, id);
        const SuperOperator rhoSmAd = sandwich_terms(id, sm * ad) - sandwich_terms(ad, sm);
        extra.push_back(complex(0.0, 0.5 * std::sqrt(excite * n * cfg.gammaBW)) * (spRhoA + rhoSmAd));
    }
    // sqrt(gammaBW Nin / 2) [rho, a^dag - a]
    if (cfg.field == OutputField::Transmitted) {
        extra.push_back(complex(std::sqrt(0.5 * cfg.gammaBW * cfg.Nin)) * commutator_right(ad - a));
    }

    SuperOperator L = build_liouvillian(H, terms, extra);
    const double defect = trace_preservation_defect(L);
    if (defect > 1e-10) {
        throw NumericalError("build_cascaded_liouvillian: generator not trace preserving (defect " +
                             std::to_string(defect) + ")");
    }
    return L;
}

SuperOperator emitter_liouvillian(const G2Config& cfg) {
    cfg.validate();
    const double n = occupation(cfg);
    const double relax = cfg.Gamma10 * (1.0 + n);
    const Operator sm = ket_bra(2, 0, 1);
    const Operator sp = sm.adjoint();
    const Operator H = std::sqrt(relax * cfg.Nin / (2.0 * (n + 1.0))) * (sp + sm);
    return build_liouvillian(H, {{relax, sm}, {cfg.Gamma10 * n, sp}});
}

double g2_zero_filtered(const G2Config& cfg, int nFock) {
    G2Config c = cfg;
    c.nFock = nFock;
    const SuperOperator L = build_cascaded_liouvillian(c);
    return two_time_g2(L, cascaded_annihilator(nFock), {0.0}).values.front();
}

int converged_fock_dimension(const G2Config& cfg) {
    cfg.validate();
    for (int n = cfg.nFock; n <= kMaxFock; n *= 2) {
        const double here = g2_zero_filtered(cfg, n);
        const double next = g2_zero_filtered(cfg, n + 2);
        if (std::abs(here - next) < kFockTolerance) {
            return n;
        }
    }
    throw TruncationError("g2: Fock truncation not converged up to nFock = " + std::to_string(kMaxFock));
}

G2Curve g2_filtered(const G2Config& cfg) {
    cfg.validate();
    if (!cfg.filtered) {
        throw ParameterError("g2_filtered: configuration has no filter");
    }
    G2Config c = cfg;
    if (c.autoFock) {
        c.nFock = converged_fock_dimension(cfg);
    }
    const std::vector<double> taus = c.tauGrid.empty() ? default_tau_grid() : c.tauGrid;
    return two_time_g2(build_cascaded_liouvillian(c), cascaded_annihilator(c.nFock), taus);
}

G2Curve g2_unfiltered(const G2Config& cfg) {
    cfg.validate();
    if (cfg.field != OutputField::Reflected) {
        throw UnsupportedError("g2_unfiltered: only the reflected field is available without a filter");
    }
    const std::vector<double> taus = cfg.tauGrid.empty() ? default_tau_grid() : cfg.tauGrid;
    return two_time_g2(emitter_liouvillian(cfg), ket_bra(2, 0, 1), taus);
}

} // namespace wqed
