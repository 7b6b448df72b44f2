#include "tqgate/superop.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "tqgate/errors.hpp"

namespace tqgate {

MatrixX kron(const MatrixX& a, const MatrixX& b) {
    MatrixX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::VectorXcd vectorize(const Matrix9& rho) {
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), 81);
}

Matrix9 unvectorize(const Eigen::VectorXcd& v) {
    return Eigen::Map<const Matrix9>(v.data());
}

MatrixX sandwich_superop(const Matrix9& l) {
    return kron(l.conjugate(), l);
}

MatrixX unitary_superop(const Matrix9& u) {
    return sandwich_superop(u);
}

MatrixX dissipator(const Matrix9& l) {
    const Matrix9 ldl = l.adjoint() * l;
    const Matrix9 id = Matrix9::Identity();
    return sandwich_superop(l) - 0.5 * kron(ldl.transpose(), id) - 0.5 * kron(id, ldl);
}

MatrixX matrix_exp(const MatrixX& m) {
    MatrixX e = m.exp();
    if (!e.allFinite())
        throw numerical_error("matrix exponential did not converge");
    return e;
}

MatrixX van_loan_integral(const MatrixX& a, const MatrixX& b, const MatrixX& d, double tau) {
    const Eigen::Index n = a.rows();
    MatrixX block = MatrixX::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = a * tau;
    block.topRightCorner(n, n) = b * tau;
    block.bottomRightCorner(n, n) = d * tau;
    return matrix_exp(block).topRightCorner(n, n);
}

MatrixX propagator_integral(const MatrixX& generator, double tau) {
    const Eigen::Index n = generator.rows();
    return van_loan_integral(MatrixX::Zero(n, n), MatrixX::Identity(n, n), generator, tau);
}

} // namespace tqgate
