#include "wqed/constants.hpp"
#include "wqed/errors.hpp"
#include "wqed/transmon.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wqed;

namespace {

constexpr double kEC = constants::h * 0.55e9;

// Mathieu characteristic values at q = 25 (EJ/EC = 50, ng = 0), in units of EC:
// omega10 = b2 - a0, anharmonicity = a2 - 2 b2 + a0. Cross-checked against a
// 121-state charge-basis diagonalization.
constexpr double kOmega10OverEC = 18.941918924316937;
constexpr double kAnharmonicityOverEC = -1.1492230292253822;
constexpr double kX21OverX10 = 1.3699871503705365;
// Ground-state dispersion E0(ng = 1/2) - E0(ng = 0), units of EC.
constexpr double kGroundDispersionOverEC = 5.618826293130041e-07;

double omega_in_EC(double omega) { return constants::hbar * omega / kEC; }

} // namespace

TEST(ChargeHamiltonian, DiagonalCaseWithoutJunction) {
    const double ng = 0.3;
    const ChargeBasisModel m = build_charge_hamiltonian(kEC, 0.0, ng, 6);
    ASSERT_EQ(m.H.rows(), 13);
    const TransmonSpectrum s = diagonalize(m.H, m.X, 3);
    // Lowest three of 4 EC (m - ng)^2 are m = 0, 1, -1.
    EXPECT_NEAR(s.groundEnergy, 4.0 * kEC * ng * ng, 1e-12 * kEC);
    EXPECT_NEAR(constants::hbar * s.omegas[1], 4.0 * kEC * (0.49 - 0.09), 1e-12 * kEC);
    EXPECT_NEAR(constants::hbar * s.omegas[2], 4.0 * kEC * (1.69 - 0.09), 1e-12 * kEC);
    for (int i = 0; i < 13; ++i) {
        const double n = i - 6 - ng;
        EXPECT_NEAR(m.H(i, i).real(), 4.0 * kEC * n * n, 1e-12 * kEC);
        EXPECT_NEAR(m.X(i, i).real(), 2.0 * constants::e * n, 1e-30);
    }
}

TEST(ChargeHamiltonian, ExactlyHermitianWithJunctionBands) {
    const ChargeBasisModel m = build_charge_hamiltonian(kEC, 50.0 * kEC, 0.17, 15);
    EXPECT_EQ((m.H - m.H.adjoint()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(m.H(3, 4).real(), -25.0 * kEC);
    EXPECT_EQ(m.H(4, 3).real(), -25.0 * kEC);
    EXPECT_EQ(m.H(3, 5).real(), 0.0);
}

TEST(ChargeHamiltonian, CutoffPrecondition) {
    const int minimum = minimum_charge_cutoff(kEC, 50.0 * kEC);
    EXPECT_EQ(minimum, 4 + 8);
    EXPECT_THROW(build_charge_hamiltonian(kEC, 50.0 * kEC, 0.0, minimum - 1), TruncationError);
    EXPECT_NO_THROW(build_charge_hamiltonian(kEC, 50.0 * kEC, 0.0, minimum));
    EXPECT_EQ(default_charge_cutoff(kEC, 50.0 * kEC), std::max(10, minimum + 5));
}

TEST(Diagonalize, MatchesMathieuOracle) {
    const TransmonSpectrum s = solve_transmon(kEC, 50.0 * kEC, 0.0, 4);
    EXPECT_EQ(s.omegas[0], 0.0);
    EXPECT_NEAR(omega_in_EC(s.omega(1, 0)), kOmega10OverEC, 1e-9);
    EXPECT_NEAR(omega_in_EC(s.omega(2, 1) - s.omega(1, 0)), kAnharmonicityOverEC, 1e-9);
}

TEST(Diagonalize, PlasmaFrequencyEstimate) {
    const TransmonSpectrum s = solve_transmon(kEC, 50.0 * kEC, 0.0, 3);
    const double estimate = std::sqrt(8.0 * 50.0) * kEC - kEC;
    EXPECT_NEAR(constants::hbar * s.omega(1, 0) / estimate, 1.0, 0.03);
}

TEST(Diagonalize, AnharmonicityApproachesMinusEC) {
    // Exact anharmonicity at EJ/EC = 50 sits 14.9% below -EC; the deviation shrinks with EJ/EC.
    double previous = 1.0;
    for (double ratio : {50.0, 100.0, 200.0, 400.0, 1000.0}) {
        const TransmonSpectrum s = solve_transmon(kEC, ratio * kEC, 0.0, 3);
        const double deviation = std::abs(omega_in_EC(s.omega(2, 1) - s.omega(1, 0)) + 1.0);
        EXPECT_LT(deviation, previous) << ratio;
        previous = deviation;
    }
    EXPECT_LT(previous, 0.03);
}

TEST(Diagonalize, ChargeMatrixElements) {
    const TransmonSpectrum s = solve_transmon(kEC, 50.0 * kEC, 0.0, 4);
    const double x10 = std::abs(s.chargeME(1, 0));
    EXPECT_NEAR(std::abs(s.chargeME(2, 1)) / x10, kX21OverX10, 1e-9);
    EXPECT_NEAR(std::abs(s.chargeME(2, 1)) / x10 / std::sqrt(2.0), 1.0, 0.05);
    EXPECT_LT(std::abs(s.chargeME(2, 0)) / x10, 0.1);
    EXPECT_LT(std::abs(s.chargeME(3, 1)) / x10, 0.1);
}

TEST(Diagonalize, ChargeOperatorHermitianWithRealDiagonal) {
    const TransmonSpectrum s = solve_transmon(kEC, 30.0 * kEC, 0.21, 5);
    const double scale = s.chargeME.cwiseAbs().maxCoeff();
    EXPECT_LT((s.chargeME - s.chargeME.adjoint()).cwiseAbs().maxCoeff(), 1e-13 * scale);
    for (int k = 0; k < 5; ++k) {
        EXPECT_LT(std::abs(s.chargeME(k, k).imag()), 1e-13 * scale);
    }
}

TEST(Diagonalize, StrictlyIncreasing) {
    for (double ng : {0.0, 0.25, 0.5}) {
        const TransmonSpectrum s = solve_transmon(kEC, 50.0 * kEC, ng, 6);
        for (int k = 1; k < 6; ++k) {
            EXPECT_GT(s.omegas[k], s.omegas[k - 1]);
        }
    }
}

TEST(Diagonalize, CutoffConvergence) {
    const int n0 = default_charge_cutoff(kEC, 50.0 * kEC);
    const TransmonSpectrum a = solve_transmon(kEC, 50.0 * kEC, 0.1, 4, n0);
    const TransmonSpectrum b = solve_transmon(kEC, 50.0 * kEC, 0.1, 4, n0 + 5);
    for (int k = 1; k < 4; ++k) {
        EXPECT_LT(std::abs(a.omegas[k] / b.omegas[k] - 1.0), 1e-10);
    }
}

TEST(Diagonalize, PhaseConventionIsDeterministic) {
    const ChargeBasisModel m = build_charge_hamiltonian(kEC, 50.0 * kEC, 0.13, 15);
    const TransmonSpectrum a = diagonalize(m.H, m.X, 4);
    const TransmonSpectrum b = diagonalize(m.H, m.X, 4);
    EXPECT_EQ((a.chargeME - b.chargeME).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Diagonalize, RejectsBadInput) {
    const ChargeBasisModel m = build_charge_hamiltonian(kEC, 50.0 * kEC, 0.0, 12);
    EXPECT_THROW(diagonalize(m.H, m.X, 26), ParameterError);
    Operator bad = m.H;
    bad(0, 1) += complex(0.0, 1.0) * kEC;
    EXPECT_THROW(diagonalize(bad, m.X, 3), ParameterError);
}

TEST(ChargeDispersion, SignAndRatio) {
    for (int k = 0; k < 4; ++k) {
        const double eps = charge_dispersion(kEC, 50.0 * kEC, k);
        EXPECT_EQ(std::signbit(eps), k % 2 == 1) << k;
    }
    const double r = 25.0;
    const double expected = -16.0 * std::sqrt(r);  // 2^4 / 1! * r^(1/2), sign (-1)
    EXPECT_NEAR(charge_dispersion(kEC, 50.0 * kEC, 1) / charge_dispersion(kEC, 50.0 * kEC, 0), expected, 1e-12);
}

TEST(ChargeDispersion, AgainstExactDispersion) {
    const TransmonSpectrum s0 = solve_transmon(kEC, 50.0 * kEC, 0.0, 2);
    const TransmonSpectrum sh = solve_transmon(kEC, 50.0 * kEC, 0.5, 2);
    const double exact = std::abs(sh.groundEnergy - s0.groundEnergy);
    EXPECT_NEAR(exact / kEC, kGroundDispersionOverEC, 1e-12);
    EXPECT_NEAR(std::abs(charge_dispersion(kEC, 50.0 * kEC, 0)) / exact, 1.0, 0.2);
}

TEST(SpectrumVsNg, CosineModel) {
    const double EJ = 50.0 * kEC;
    for (int k = 0; k < 3; ++k) {
        const double eps = charge_dispersion(kEC, EJ, k);
        const double quarter = spectrum_vs_ng(kEC, EJ, k, 0.25);
        const double w0 = spectrum_vs_ng(kEC, EJ, k, 0.0);
        const double wh = spectrum_vs_ng(kEC, EJ, k, 0.5);
        // Absolute level frequencies are ~1e11 rad/s, so the difference carries their rounding.
        EXPECT_NEAR(w0 - wh, -eps / constants::hbar, 1e-14 * std::abs(w0));
        EXPECT_NEAR(std::abs(dispersion_slope(kEC, EJ, k, 0.25)), constants::pi * std::abs(eps) / constants::hbar,
                    1e-12 * std::abs(eps) / constants::hbar);
        EXPECT_NEAR(quarter, 0.5 * (w0 + wh), 1e-6 * std::abs(quarter));
        // Finite-difference slope.
        const double h = 1e-3;
        const double fd = (spectrum_vs_ng(kEC, EJ, k, 0.3 + h) - spectrum_vs_ng(kEC, EJ, k, 0.3 - h)) / (2.0 * h);
        EXPECT_NEAR(fd, dispersion_slope(kEC, EJ, k, 0.3), 1e-4 * std::abs(fd));
        EXPECT_EQ(dispersion_slope(kEC, EJ, k, 0.0), 0.0);
    }
}

TEST(SpectrumVsNg, QuarterPointIsExactLevel) {
    const TransmonSpectrum s = solve_transmon(kEC, 50.0 * kEC, 0.25, 3);
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(spectrum_vs_ng(kEC, 50.0 * kEC, k, 0.25) * constants::hbar,
                    s.groundEnergy + constants::hbar * s.omegas[k], 1e-12 * std::abs(s.groundEnergy) + 1e-12 * kEC);
    }
}

TEST(SpectrumVsNg, DiagonalChargeElementFromSlope) {
    // Hellmann-Feynman: <k|X|k> = -(e / 4 EC) dE_k/dng.
    const double EJ = 50.0 * kEC;
    const double ng = 0.25;
    const double h = 1e-3;
    const TransmonSpectrum p = solve_transmon(kEC, EJ, ng + h, 2);
    const TransmonSpectrum m = solve_transmon(kEC, EJ, ng - h, 2);
    const TransmonSpectrum s = solve_transmon(kEC, EJ, ng, 2);
    for (int k = 0; k < 2; ++k) {
        const double Ep = p.groundEnergy + constants::hbar * p.omegas[k];
        const double Em = m.groundEnergy + constants::hbar * m.omegas[k];
        const double slope = (Ep - Em) / (2.0 * h) / constants::hbar;  // d omega_k / d ng
        const double fromSlope = constants::e / (4.0 * kEC) * constants::hbar * std::abs(slope);
        EXPECT_NEAR(std::abs(s.chargeME(k, k)) / fromSlope, 1.0, 1e-3) << k;
    }
}
