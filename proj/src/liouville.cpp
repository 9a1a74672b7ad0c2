#include "wqed/liouville.hpp"

#include "wqed/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace wqed {

namespace {

void require_square(const Operator& a, const char* what) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw ParameterError(std::string(what) + ": operator must be square and non-empty");
    }
}

double one_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

Eigen::MatrixXcd exp_scaled(const Eigen::MatrixXcd& generator, double tau) {
    const double size = one_norm(generator) * tau;
    if (size <= kExpSplitThreshold) {
        return (generator * tau).exp();
    }
    const int squarings = static_cast<int>(std::ceil(std::log2(size / kExpSplitThreshold)));
    Eigen::MatrixXcd p = (generator * (tau / std::ldexp(1.0, squarings))).exp();
    for (int k = 0; k < squarings; ++k) {
        p = (p * p).eval();
    }
    return p;
}

} // namespace

CVector vectorize(const Operator& rho) {
    return Eigen::Map<const CVector>(rho.data(), rho.size());
}

Operator unvectorize(const CVector& v, int dim) {
    if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
        throw ParameterError("unvectorize: length does not match dim^2");
    }
    return Eigen::Map<const Operator>(v.data(), dim, dim);
}

SuperOperator::SuperOperator(int dim)
    : dim_(dim), matrix_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim) * dim,
                                                static_cast<Eigen::Index>(dim) * dim)) {}

SuperOperator::SuperOperator(int dim, Eigen::MatrixXcd matrix) : dim_(dim), matrix_(std::move(matrix)) {
    const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw ParameterError("SuperOperator: matrix must be dim^2 x dim^2");
    }
}

SuperOperator SuperOperator::identity(int dim) {
    const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
    return SuperOperator(dim, Eigen::MatrixXcd::Identity(n, n));
}

Operator SuperOperator::apply(const Operator& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw ParameterError("SuperOperator::apply: dimension mismatch");
    }
    return unvectorize(matrix_ * vectorize(rho), dim_);
}

SuperOperator SuperOperator::compose(const SuperOperator& other) const {
    if (other.dim_ != dim_) {
        throw ParameterError("SuperOperator::compose: dimension mismatch");
    }
    return SuperOperator(dim_, matrix_ * other.matrix_);
}

SuperOperator SuperOperator::dual() const { return SuperOperator(dim_, matrix_.adjoint()); }

SuperOperator& SuperOperator::operator+=(const SuperOperator& rhs) {
    if (rhs.dim_ != dim_) {
        throw ParameterError("SuperOperator: dimension mismatch in sum");
    }
    matrix_ += rhs.matrix_;
    return *this;
}

SuperOperator operator-(SuperOperator lhs, const SuperOperator& rhs) {
    if (rhs.dim_ != lhs.dim_) {
        throw ParameterError("SuperOperator: dimension mismatch in difference");
    }
    lhs.matrix_ -= rhs.matrix_;
    return lhs;
}

SuperOperator operator*(complex s, SuperOperator rhs) {
    rhs.matrix_ *= s;
    return rhs;
}

double SuperOperator::norm() const { return matrix_.size() == 0 ? 0.0 : matrix_.cwiseAbs().maxCoeff(); }

SuperOperator sandwich_terms(const Operator& A, const Operator& B) {
    require_square(A, "sandwich_terms");
    require_square(B, "sandwich_terms");
    if (A.rows() != B.rows()) {
        throw ParameterError("sandwich_terms: dimension mismatch");
    }
    return SuperOperator(static_cast<int>(A.rows()), kron(B.transpose(), A));
}

SuperOperator commutator_left(const Operator& A) {
    const Operator id = Operator::Identity(A.rows(), A.cols());
    return sandwich_terms(A, id) - sandwich_terms(id, A);
}

SuperOperator commutator_right(const Operator& B) {
    const Operator id = Operator::Identity(B.rows(), B.cols());
    return sandwich_terms(id, B) - sandwich_terms(B, id);
}

SuperOperator dissipator(const Operator& c) {
    require_square(c, "dissipator");
    const Operator id = Operator::Identity(c.rows(), c.cols());
    const Operator n = c.adjoint() * c;
    return sandwich_terms(c, c.adjoint()) - complex(0.5) * (sandwich_terms(n, id) + sandwich_terms(id, n));
}

SuperOperator build_liouvillian(const Operator& H, const std::vector<CollapseTerm>& terms,
                                const std::vector<SuperOperator>& extra) {
    require_square(H, "build_liouvillian");
    if (!is_hermitian(H, 1e-12)) {
        throw ParameterError("build_liouvillian: Hamiltonian is not Hermitian");
    }
    const int dim = static_cast<int>(H.rows());
    SuperOperator L = complex(0.0, -1.0) * commutator_left(H);
    for (const auto& term : terms) {
        if (term.op.rows() != dim || term.op.cols() != dim) {
            throw ParameterError("build_liouvillian: collapse operator dimension mismatch");
        }
        if (!(term.rate >= 0.0)) {
            throw ParameterError("build_liouvillian: collapse rates must be non-negative");
        }
        if (term.rate > 0.0) {
            L += complex(term.rate) * dissipator(term.op);
        }
    }
    for (const auto& e : extra) {
        L += e;
    }
    return L;
}

double trace_preservation_defect(const SuperOperator& L) {
    const int d = L.dim();
    Eigen::RowVectorXcd functional = Eigen::RowVectorXcd::Zero(L.matrix().cols());
    for (int i = 0; i < d; ++i) {
        functional += L.matrix().row(static_cast<Eigen::Index>(i) * d + i);
    }
    const double scale = std::max(L.norm(), 1e-300);
    return functional.cwiseAbs().maxCoeff() / scale;
}

double DensityMatrix::hermiticity_defect() const {
    return rho_.size() == 0 ? 0.0 : (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    const Operator herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double hermTol, double traceTol, double posTol) const {
    return hermiticity_defect() <= hermTol && std::abs(trace() - 1.0) <= traceTol && min_eigenvalue() >= -posTol;
}

int kernel_dimension(const SuperOperator& L, double relTol) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(L.matrix());
    qr.setThreshold(relTol);
    return static_cast<int>(L.matrix().cols() - qr.rank());
}

DensityMatrix steady_state(const SuperOperator& L) {
    const int d = L.dim();
    if (d == 0) {
        throw ParameterError("steady_state: empty generator");
    }
    const double defect = trace_preservation_defect(L);
    if (defect > 1e-10) {
        throw ParameterError("steady_state: generator is not trace preserving (defect " + std::to_string(defect) + ")");
    }
    const int kernel = kernel_dimension(L);
    if (kernel > 1) {
        throw AmbiguityError("steady_state: kernel dimension " + std::to_string(kernel) + " > 1");
    }

    const double scale = std::max(L.norm(), 1e-300);
    Eigen::MatrixXcd bordered = L.matrix();
    bordered.row(0).setZero();
    for (int i = 0; i < d; ++i) {
        bordered(0, static_cast<Eigen::Index>(i) * d + i) = scale;
    }
    CVector rhs = CVector::Zero(bordered.rows());
    rhs(0) = scale;

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(bordered);
    const CVector x = lu.solve(rhs);
    if (!x.allFinite()) {
        throw NumericalError("steady_state: singular bordered system");
    }
    Operator rho = unvectorize(x, d);
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace();

    const double residual = (L.matrix() * vectorize(rho)).cwiseAbs().maxCoeff();
    if (residual > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "steady_state: residual " << residual << " exceeds 1e-10 * ||L|| = " << 1e-10 * scale;
        throw NumericalError(msg.str());
    }
    return DensityMatrix(std::move(rho));
}

SuperOperator propagator(const SuperOperator& L, double tau) {
    if (!(tau >= 0.0)) {
        throw ParameterError("propagator: tau must be non-negative");
    }
    if (tau == 0.0) {
        return SuperOperator::identity(L.dim());
    }
    Eigen::MatrixXcd p = exp_scaled(L.matrix(), tau);
    if (!p.allFinite()) {
        throw NumericalError("propagator: non-finite matrix exponential (||L||_1 tau = " +
                             std::to_string(one_norm(L.matrix()) * tau) + ")");
    }
    return SuperOperator(L.dim(), std::move(p));
}

DensityMatrix propagate(const SuperOperator& L, const DensityMatrix& rho0, double t) {
    if (!(t >= 0.0)) {
        throw ParameterError("propagate: t must be non-negative");
    }
    if (rho0.dim() != L.dim()) {
        throw ParameterError("propagate: dimension mismatch");
    }
    if (t == 0.0) {
        return rho0;
    }
    const double size = one_norm(L.matrix()) * t;
    const int steps = size <= kExpSplitThreshold ? 1 : static_cast<int>(std::ceil(size / kExpSplitThreshold));
    const Eigen::MatrixXcd step = (L.matrix() * (t / steps)).exp();
    CVector v = vectorize(rho0.matrix());
    for (int k = 0; k < steps; ++k) {
        v = step * v;
    }
    DensityMatrix out(unvectorize(v, L.dim()));
    const double traceDrift = std::abs(out.trace() - rho0.trace());
    const double hermDrift = out.hermiticity_defect();
    if (!v.allFinite() || traceDrift > 1e-8 || hermDrift > 1e-8) {
        std::ostringstream msg;
        msg << "propagate: accuracy lost after " << steps << " step(s), trace drift " << traceDrift
            << ", hermiticity defect " << hermDrift << ", ||L||_1 t = " << size;
        throw NumericalError(msg.str());
    }
    return out;
}

G2Curve two_time_g2(const SuperOperator& L, const Operator& a, const std::vector<double>& taus) {
    return two_time_g2(L, steady_state(L), a, taus);
}

G2Curve two_time_g2(const SuperOperator& L, const DensityMatrix& rhoSteady, const Operator& a,
                    const std::vector<double>& taus) {
    if (a.rows() != L.dim() || a.cols() != L.dim()) {
        throw ParameterError("two_time_g2: operator dimension mismatch");
    }
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] >= 0.0) || (i > 0 && !(taus[i] > taus[i - 1]))) {
            throw ParameterError("two_time_g2: tau grid must be non-negative and strictly ascending");
        }
    }
    const Operator number = a.adjoint() * a;
    const double occupation = rhoSteady.expectation(number).real();
    if (!(occupation > 1e-13)) {
        throw DivisionDomainError("two_time_g2: stationary photon number vanishes");
    }
    const double norm2 = occupation * occupation;

    // Tr[A X] = vec(A^T) . vec(X)
    const Eigen::RowVectorXcd functional = vectorize(number.transpose()).transpose();
    const CVector kicked = vectorize(a * rhoSteady.matrix() * a.adjoint());

    G2Curve curve;
    curve.taus = taus;
    curve.values.resize(taus.size());
    if (taus.empty()) {
        return curve;
    }

    bool uniform = taus.size() > 2;
    const double step = taus.size() > 1 ? taus[1] - taus[0] : 0.0;
    for (std::size_t i = 1; uniform && i < taus.size(); ++i) {
        uniform = std::abs((taus[i] - taus[i - 1]) - step) <= 1e-9 * step;
    }

    if (uniform) {
        CVector x = propagator(L, taus[0]).apply(kicked);
        const SuperOperator p = propagator(L, step);
        for (std::size_t i = 0; i < taus.size(); ++i) {
            if (i > 0) {
                x = p.apply(x);
            }
            curve.values[i] = (functional * x)(0).real() / norm2;
        }
    } else {
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const CVector x = propagator(L, taus[i]).apply(kicked);
            curve.values[i] = (functional * x)(0).real() / norm2;
        }
    }
    return curve;
}

} // namespace wqed
