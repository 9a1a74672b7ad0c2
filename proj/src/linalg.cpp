#include "wqed/linalg.hpp"

#include <cmath>

namespace wqed {

Operator kron(const Operator& a, const Operator& b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double hermiticity_defect(const Operator& a) {
    if (a.rows() != a.cols()) {
        return INFINITY;
    }
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
    return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Operator ket_bra(int n, int row, int col) {
    Operator out = Operator::Zero(n, n);
    out(row, col) = 1.0;
    return out;
}

Operator destroy(int n) {
    Operator a = Operator::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

} // namespace wqed
