#include "wqed/transmon.hpp"

#include "wqed/constants.hpp"
#include "wqed/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace wqed {

namespace {

void require_energies(double EC, double EJ) {
    if (!(EC > 0.0)) {
        throw ParameterError("EC must be positive");
    }
    if (!(EJ >= 0.0)) {
        throw ParameterError("EJ must be non-negative");
    }
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

} // namespace

int minimum_charge_cutoff(double EC, double EJ) {
    require_energies(EC, EJ);
    return 4 + static_cast<int>(std::ceil(std::sqrt(EJ / EC)));
}

int default_charge_cutoff(double EC, double EJ) {
    return std::max(10, minimum_charge_cutoff(EC, EJ) + 5);
}

ChargeBasisModel build_charge_hamiltonian(double EC, double EJ, double ng, int nCut) {
    require_energies(EC, EJ);
    const int required = minimum_charge_cutoff(EC, EJ);
    if (nCut < required) {
        throw TruncationError("charge cutoff " + std::to_string(nCut) + " below required " +
                              std::to_string(required) + " for EJ/EC = " + std::to_string(EJ / EC));
    }
    const int dim = 2 * nCut + 1;
    ChargeBasisModel model;
    model.nCut = nCut;
    model.H = Operator::Zero(dim, dim);
    model.X = Operator::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double q = static_cast<double>(i - nCut) - ng;
        model.H(i, i) = 4.0 * EC * q * q;
        model.X(i, i) = 2.0 * constants::e * q;
        if (i + 1 < dim) {
            model.H(i, i + 1) = -0.5 * EJ;
            model.H(i + 1, i) = -0.5 * EJ;
        }
    }
    return model;
}

TransmonSpectrum diagonalize(const Operator& H, const Operator& X, int nLevels) {
    if (H.rows() != H.cols() || X.rows() != H.rows() || X.cols() != H.cols()) {
        throw ParameterError("diagonalize: H and X must be square and of equal dimension");
    }
    if (nLevels < 1 || nLevels > H.rows()) {
        throw ParameterError("diagonalize: nLevels must lie in [1, dim(H)]");
    }
    if (!is_hermitian(H, 1e-12)) {
        throw ParameterError("diagonalize: H is not Hermitian");
    }

    Eigen::SelfAdjointEigenSolver<Operator> solver(H);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("diagonalize: eigen-solver failed (info=" +
                             std::to_string(static_cast<int>(solver.info())) + ", dim=" +
                             std::to_string(H.rows()) + ")");
    }

    Operator vecs = solver.eigenvectors().leftCols(nLevels);
    for (int k = 0; k < nLevels; ++k) {
        Eigen::Index idx = 0;
        vecs.col(k).cwiseAbs().maxCoeff(&idx);
        const complex c = vecs(idx, k);
        vecs.col(k) *= std::conj(c) / std::abs(c);
    }

    TransmonSpectrum spec;
    spec.nLevels = nLevels;
    spec.nCut = static_cast<int>((H.rows() - 1) / 2);
    spec.groundEnergy = solver.eigenvalues()(0);
    spec.omegas.resize(nLevels);
    for (int k = 0; k < nLevels; ++k) {
        spec.omegas[k] = (solver.eigenvalues()(k) - spec.groundEnergy) / constants::hbar;
    }
    spec.chargeME = vecs.adjoint() * X * vecs;
    return spec;
}

TransmonSpectrum solve_transmon(double EC, double EJ, double ng, int nLevels, int nCut) {
    if (nCut <= 0) {
        nCut = default_charge_cutoff(EC, EJ);
    }
    const ChargeBasisModel model = build_charge_hamiltonian(EC, EJ, ng, nCut);
    TransmonSpectrum spec = diagonalize(model.H, model.X, nLevels);
    spec.epsilons.resize(nLevels);
    for (int k = 0; k < nLevels; ++k) {
        spec.epsilons[k] = EJ > 0.0 ? charge_dispersion(EC, EJ, k) : 0.0;
    }
    return spec;
}

double charge_dispersion(double EC, double EJ, int k) {
    require_energies(EC, EJ);
    if (k < 0) {
        throw ParameterError("charge_dispersion: level index must be non-negative");
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double ratio = EJ / (2.0 * EC);
    return sign * EC * std::pow(2.0, 4 * k + 5) / factorial(k) * std::sqrt(2.0 / constants::pi) *
           std::pow(ratio, 0.5 * k + 0.75) * std::exp(-std::sqrt(8.0 * EJ / EC));
}

double spectrum_vs_ng(double EC, double EJ, int k, double ng) {
    const ChargeBasisModel model = build_charge_hamiltonian(EC, EJ, 0.25, default_charge_cutoff(EC, EJ));
    Eigen::SelfAdjointEigenSolver<Operator> solver(model.H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success || k >= solver.eigenvalues().size()) {
        throw NumericalError("spectrum_vs_ng: eigen-solver failed");
    }
    const double omegaQuarter = solver.eigenvalues()(k) / constants::hbar;
    return omegaQuarter - 0.5 * charge_dispersion(EC, EJ, k) / constants::hbar * std::cos(constants::two_pi * ng);
}

double dispersion_slope(double EC, double EJ, int k, double ng) {
    return constants::pi * charge_dispersion(EC, EJ, k) / constants::hbar * std::sin(constants::two_pi * ng);
}

} // namespace wqed
