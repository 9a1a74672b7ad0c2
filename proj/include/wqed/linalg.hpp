#pragma once

#include <Eigen/Dense>

#include <complex>

namespace wqed {

using complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;  // square operator on a truncated Hilbert space
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr complex I{0.0, 1.0};

Operator kron(const Operator& a, const Operator& b);

// Max-abs deviation from Hermiticity, relative to the largest entry.
double hermiticity_defect(const Operator& a);

inline bool is_hermitian(const Operator& a, double tol = 1e-12) {
    return hermiticity_defect(a) <= tol;
}

// Ladder and projector helpers on an n-level space, |k> = unit vector k.
Operator ket_bra(int n, int row, int col);
Operator destroy(int n);  // harmonic-oscillator annihilator truncated at n levels

} // namespace wqed
