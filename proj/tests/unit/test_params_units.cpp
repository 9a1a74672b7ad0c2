#include "wqed/constants.hpp"
#include "wqed/errors.hpp"
#include "wqed/params_units.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wqed;

namespace {

CircuitParams reference_circuit(int nPorts = 1) {
    CircuitParams p;
    p.Cc = 10e-15;
    p.CJ = 25e-15;
    p.EJ = 50.0 * constants::e * constants::e / (2.0 * 35e-15);
    p.Z0 = 50.0;
    p.nPorts = nPorts;
    return p;
}

} // namespace

TEST(DeriveParams, BasicRelations) {
    const CircuitParams p = reference_circuit();
    const DerivedParams d = derive_params(p);
    EXPECT_EQ(d.CSigma, p.Cc + p.CJ);
    EXPECT_DOUBLE_EQ(d.EC, constants::e * constants::e / (2.0 * d.CSigma));
    EXPECT_DOUBLE_EQ(d.gamma, 50.0 * std::pow(10.0 / 35.0, 2));
    EXPECT_DOUBLE_EQ(d.tauRC, 50.0 * 10e-15 * 25e-15 / 35e-15);
    EXPECT_DOUBLE_EQ(d.kappa, 10.0 / 35.0);
}

TEST(DeriveParams, InverseRcTimescale) {
    const DerivedParams d = derive_params(reference_circuit());
    const double fRC = 1.0 / (constants::two_pi * d.tauRC);
    EXPECT_GE(fRC, 350e9);
    EXPECT_LE(fRC, 500e9);
    EXPECT_NEAR(fRC, 445.6e9, 0.1e9);
}

TEST(DeriveParams, ChargingEnergyAt35fF) {
    const DerivedParams d = derive_params(reference_circuit());
    EXPECT_NEAR(d.EC / constants::h, 0.55344e9, 1e5);
}

TEST(DeriveParams, DecouplingLimit) {
    const DerivedParams ref = derive_params(reference_circuit());
    CircuitParams p = reference_circuit();
    p.Cc = 1e-30;
    const DerivedParams d = derive_params(p);
    EXPECT_LT(d.gamma / ref.gamma, 1e-28);
    EXPECT_LT(d.tauRC / ref.tauRC, 1e-14);
}

TEST(DeriveParams, TwoPortsHalveExactly) {
    const DerivedParams one = derive_params(reference_circuit(1));
    const DerivedParams two = derive_params(reference_circuit(2));
    EXPECT_EQ(two.gamma, one.gamma / 2.0);
    EXPECT_EQ(two.tauRC, one.tauRC / 2.0);
}

TEST(DeriveParams, GateCharge) {
    CircuitParams p = reference_circuit();
    p.VDC = 2.0 * constants::e * 0.25 / p.Cc;
    EXPECT_NEAR(derive_params(p).ng, 0.25, 1e-15);
}

TEST(DeriveParams, RejectsNonPositive) {
    for (double CircuitParams::*field : {&CircuitParams::Cc, &CircuitParams::CJ, &CircuitParams::EJ, &CircuitParams::Z0}) {
        CircuitParams p = reference_circuit();
        p.*field = 0.0;
        EXPECT_THROW(derive_params(p), ParameterError);
        p.*field = -1.0;
        EXPECT_THROW(derive_params(p), ParameterError);
    }
    CircuitParams p = reference_circuit();
    p.T = -0.1;
    EXPECT_THROW(derive_params(p), ParameterError);
    p = reference_circuit(0);
    EXPECT_THROW(derive_params(p), ParameterError);
}

TEST(MapPorts, SinglePort) {
    const DerivedParams d = derive_params(reference_circuit());
    const PortMapping m = map_ports(d, 1);
    EXPECT_EQ(m.selfReflection, 1.0);
    EXPECT_EQ(m.gamma, d.gamma);
    EXPECT_EQ(m.inWeight, 1.0);
    EXPECT_DOUBLE_EQ(m.emissionWeight, d.tauRC / d.CJ);
}

TEST(MapPorts, TwoPorts) {
    const DerivedParams d = derive_params(reference_circuit());
    const PortMapping m = map_ports(d, 2);
    EXPECT_EQ(m.selfReflection, 0.0);
    EXPECT_EQ(m.crossTransmission, 1.0);
    EXPECT_EQ(m.gamma, d.gamma / 2.0);
    EXPECT_EQ(m.tauRC, d.tauRC / 2.0);
}

TEST(MapPorts, FourPorts) {
    const PortMapping m = map_ports(derive_params(reference_circuit()), 4);
    EXPECT_EQ(m.selfReflection, -0.5);
    EXPECT_EQ(m.crossTransmission, 0.5);
}

TEST(MapPorts, FluxBookkeeping) {
    const DerivedParams d = derive_params(reference_circuit());
    for (int n = 1; n <= 9; ++n) {
        const PortMapping m = map_ports(d, n);
        EXPECT_NEAR(m.selfReflection + m.crossTransmission * (n - 1), 1.0, 1e-15) << n;
    }
}

TEST(MapPorts, ConsistentWithDeriveParams) {
    const DerivedParams one = derive_params(reference_circuit(1));
    const DerivedParams three = derive_params(reference_circuit(3));
    EXPECT_DOUBLE_EQ(map_ports(one, 3).gamma, three.gamma);
    EXPECT_DOUBLE_EQ(map_ports(three, 1).tauRC, one.tauRC);
}

TEST(MapPorts, RejectsZeroPorts) {
    EXPECT_THROW(map_ports(derive_params(reference_circuit()), 0), ParameterError);
}

TEST(PowerToFlux, ZeroPower) {
    EXPECT_EQ(power_to_flux(Watts{0.0}, 1e10), 0.0);
}

TEST(PowerToFlux, ReferenceDrivePower) {
    // 10^(-13.1) mW at 5.12 GHz; the evaluated flux is 2.34e7 photons per second.
    const double omega = constants::two_pi * 5.12e9;
    const double flux = power_to_flux(DBm{-131.0}, omega);
    const double expected = std::pow(10.0, -13.1) * 1e-3 / (constants::hbar * omega);
    EXPECT_NEAR(flux, expected, 1e-9 * expected);
    EXPECT_NEAR(flux, 2.34e7, 0.01e7);
}

TEST(PowerToFlux, RoundTripAndScaling) {
    const double omega = constants::two_pi * 7.3e9;
    for (double p : {1e-20, 3.7e-17, 2e-12}) {
        const double flux = power_to_flux(Watts{p}, omega);
        EXPECT_NEAR(flux_to_power(flux, omega).value, p, 1e-14 * p);
        EXPECT_NEAR(power_to_flux(Watts{2.0 * p}, omega), 2.0 * flux, 1e-14 * flux);
        EXPECT_NEAR(power_to_flux(Watts{p}, 2.0 * omega), 0.5 * flux, 1e-14 * flux);
    }
    EXPECT_NEAR(to_dbm(to_watts(DBm{-131.0})).value, -131.0, 1e-12);
    EXPECT_DOUBLE_EQ(to_watts(DBm{0.0}).value, 1e-3);
}

TEST(PowerToFlux, RejectsBadInput) {
    EXPECT_THROW(power_to_flux(Watts{1e-18}, 0.0), ParameterError);
    EXPECT_THROW(power_to_flux(Watts{1e-18}, -1.0), ParameterError);
    EXPECT_THROW(power_to_flux(Watts{-1e-18}, 1e9), ParameterError);
}

TEST(FluxToRabi, Values) {
    EXPECT_EQ(flux_to_rabi(0.0, 1e8), 0.0);
    const double Gamma = constants::two_pi * 41e6;
    const double rabi = flux_to_rabi(2.3e4, Gamma) / constants::two_pi;
    EXPECT_GT(rabi, 0.5e6);
    EXPECT_LT(rabi, 0.6e6);
    EXPECT_DOUBLE_EQ(flux_to_rabi(3.0, 5.0), std::sqrt(30.0));
    EXPECT_THROW(flux_to_rabi(-1.0, 1e8), ParameterError);
    EXPECT_THROW(flux_to_rabi(1.0, 0.0), ParameterError);
}

TEST(FluxToVoltage, RoundTrip) {
    const double omega = constants::two_pi * 5e9;
    const double v = flux_to_voltage_amplitude(1e6, omega, 50.0);
    EXPECT_NEAR(v * v, 2.0 * 50.0 * constants::hbar * omega * 1e6, 1e-12 * v * v);
    EXPECT_NEAR(voltage_amplitude_to_flux(v, omega, 50.0), 1e6, 1e-6);
}
