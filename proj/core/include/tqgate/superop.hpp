#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tqgate {

using Matrix9 = Eigen::Matrix<std::complex<double>, 9, 9>;
using MatrixX = Eigen::MatrixXcd;
using Vector9 = Eigen::Matrix<std::complex<double>, 9, 1>;

// Column-major vectorization: vec(A rho B) = (B^T kron A) vec(rho).
MatrixX kron(const MatrixX& a, const MatrixX& b);
Eigen::VectorXcd vectorize(const Matrix9& rho);
Matrix9 unvectorize(const Eigen::VectorXcd& v);

// Superoperator for rho -> L rho L^dag.
MatrixX sandwich_superop(const Matrix9& l);
// Superoperator for rho -> U rho U^dag (same map, named for intent).
MatrixX unitary_superop(const Matrix9& u);
// Full Lindblad dissipator D[L] rho = L rho L^dag - 1/2 {L^dag L, rho}.
MatrixX dissipator(const Matrix9& l);

// Matrix exponential (scaling-and-squaring Pade). Throws numerical_error on
// non-finite results.
MatrixX matrix_exp(const MatrixX& m);

// Van Loan block integral: the upper-right block of
//   exp([[A, B], [0, D]] tau)  =  int_0^tau e^{A (tau - s)} B e^{D s} ds.
// Computed on the time-scaled generator so the entries stay O(1).
MatrixX van_loan_integral(const MatrixX& a, const MatrixX& b, const MatrixX& d, double tau);

// int_0^tau e^{G s} ds (Van Loan with A = 0, B = I).
MatrixX propagator_integral(const MatrixX& generator, double tau);

} // namespace tqgate
