#pragma once

// Superoperator algebra on column-stacked operators.
//
// Convention: vec(rho) concatenates the columns of rho, so that
//   vec(A rho B) = (B^T (x) A) vec(rho).
// Eigen stores matrices column-major, so vec() is a plain reinterpretation.
//
// Hamiltonians are passed as H / hbar (rad/s); every rate is in rad/s or 1/s.

#include "wqed/linalg.hpp"

#include <vector>

namespace wqed {

CVector vectorize(const Operator& rho);
Operator unvectorize(const CVector& v, int dim);

class SuperOperator {
public:
    SuperOperator() = default;
    explicit SuperOperator(int dim);  // zero map
    SuperOperator(int dim, Eigen::MatrixXcd matrix);

    static SuperOperator identity(int dim);

    int dim() const { return dim_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

    Operator apply(const Operator& rho) const;
    CVector apply(const CVector& v) const { return matrix_ * v; }

    // (this o other)(rho) = this(other(rho))
    SuperOperator compose(const SuperOperator& other) const;
    SuperOperator dual() const;  // Heisenberg-picture map, the adjoint of matrix()

    SuperOperator& operator+=(const SuperOperator& rhs);
    friend SuperOperator operator+(SuperOperator lhs, const SuperOperator& rhs) { return lhs += rhs; }
    friend SuperOperator operator-(SuperOperator lhs, const SuperOperator& rhs);
    friend SuperOperator operator*(complex s, SuperOperator rhs);

    double norm() const;  // max-abs entry

private:
    int dim_ = 0;
    Eigen::MatrixXcd matrix_;
};

// rho -> A rho B
SuperOperator sandwich_terms(const Operator& A, const Operator& B);
// rho -> [A, rho B] and rho -> [A rho, B]; the shapes appearing in cascaded generators.
SuperOperator commutator_left(const Operator& A);   // rho -> [A, rho]
SuperOperator commutator_right(const Operator& B);  // rho -> [rho, B]

// D(c) rho = c rho c^dag - (c^dag c rho + rho c^dag c) / 2
SuperOperator dissipator(const Operator& c);

struct CollapseTerm {
    double rate = 0.0;
    Operator op;
};

// L rho = -i [H, rho] + sum rate D(c) rho + sum extra(rho)
SuperOperator build_liouvillian(const Operator& H, const std::vector<CollapseTerm>& terms,
                                const std::vector<SuperOperator>& extra = {});

// max |Tr L(E_jk)| over matrix units, relative to L.norm(); zero for trace-preserving L.
double trace_preservation_defect(const SuperOperator& L);

class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(Operator rho) : rho_(std::move(rho)) {}

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Operator& matrix() const { return rho_; }
    complex operator()(int i, int j) const { return rho_(i, j); }

    complex trace() const { return rho_.trace(); }
    double hermiticity_defect() const;
    double min_eigenvalue() const;  // of the Hermitian part
    complex expectation(const Operator& A) const { return (A * rho_).trace(); }

    // Hermitian within 1e-10, unit trace within 1e-10, eigenvalues >= -1e-8.
    bool is_physical(double hermTol = 1e-10, double traceTol = 1e-10, double posTol = 1e-8) const;

private:
    Operator rho_;
};

// Stationary state of a trace-preserving L by the bordered linear system in
// which the equation for rho_00 is replaced by Tr rho = 1. Throws
// AmbiguityError when the kernel of L is not one-dimensional.
DensityMatrix steady_state(const SuperOperator& L);

// Dimension of ker L estimated by rank-revealing QR.
int kernel_dimension(const SuperOperator& L, double relTol = 1e-10);

// Generator norm * time above which work is split into shorter exponentials.
inline constexpr double kExpSplitThreshold = 1e3;

// exp(L tau) as an explicit map.
SuperOperator propagator(const SuperOperator& L, double tau);

// exp(L t) rho0
DensityMatrix propagate(const SuperOperator& L, const DensityMatrix& rho0, double t);

struct G2Curve {
    std::vector<double> taus;    // s
    std::vector<double> values;  // dimensionless
};

// g2(tau) = Tr[a^dag a P(tau)(a rho_s a^dag)] / Tr[a^dag a rho_s]^2 with rho_s
// the stationary state of L. Uniform grids reuse P(d tau).
G2Curve two_time_g2(const SuperOperator& L, const Operator& a, const std::vector<double>& taus);
G2Curve two_time_g2(const SuperOperator& L, const DensityMatrix& rhoSteady, const Operator& a,
                    const std::vector<double>& taus);

} // namespace wqed
