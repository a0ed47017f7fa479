#pragma once

#include <complex>

#include <Eigen/Dense>

#include "knotq/errors.hpp"

namespace knotq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Everything here is dense; the largest matrices we build are a few hundred
// rows (Fibonacci spaces on a dozen strands).
inline constexpr int kMaxMatrixDim = 1 << 10;

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
// (a (x) b)[i*p + k, j*q + l] = a[i,j] b[k,l]; first factor most significant,
// so qubit basis order is |00>, |01>, |10>, |11>.
ComplexMatrix mat_tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_dagger(const ComplexMatrix& a);
Complex mat_trace(const ComplexMatrix& a);
ComplexMatrix mat_identity(int n);

// || a^dagger a - I ||_inf <= tol
bool is_unitary(const ComplexMatrix& a, double tol = 1e-12);
double unitarity_error(const ComplexMatrix& a);
// max-abs entrywise
double mat_dist(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix mat_from_rows(int rows, int cols, std::initializer_list<Complex> entries);

namespace gate {
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix cnot();
ComplexMatrix swap();
}  // namespace gate

}  // namespace knotq
