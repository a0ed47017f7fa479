#include "knotq/cmatrix.hpp"

#include <cmath>
#include <string>

namespace knotq {

namespace {

void check_dim(const ComplexMatrix& a) {
  if (a.rows() > kMaxMatrixDim || a.cols() > kMaxMatrixDim)
    throw BoundExceeded("matrix dimension above " + std::to_string(kMaxMatrixDim));
}

std::string shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw InvalidArgument("mat_mul: " + shape(a) + " times " + shape(b));
  return a * b;
}

ComplexMatrix mat_tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  check_dim(out);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix mat_dagger(const ComplexMatrix& a) { return a.adjoint(); }

Complex mat_trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("trace of non-square " + shape(a));
  return a.trace();
}

ComplexMatrix mat_identity(int n) { return ComplexMatrix::Identity(n, n); }

double unitarity_error(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("unitarity of non-square " + shape(a));
  ComplexMatrix e = a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols());
  return e.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return a.size() > 0 && unitarity_error(a) <= tol;
}

double mat_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("mat_dist: " + shape(a) + " vs " + shape(b));
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix mat_from_rows(int rows, int cols, std::initializer_list<Complex> entries) {
  if (static_cast<long>(entries.size()) != static_cast<long>(rows) * cols)
    throw InvalidArgument("mat_from_rows: wrong entry count");
  ComplexMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

namespace gate {

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return mat_from_rows(2, 2, {s, s, s, -s});
}
ComplexMatrix pauli_x() { return mat_from_rows(2, 2, {0, 1, 1, 0}); }
ComplexMatrix pauli_y() {
  const Complex i(0, 1);
  return mat_from_rows(2, 2, {0, -i, i, 0});
}
ComplexMatrix pauli_z() { return mat_from_rows(2, 2, {1, 0, 0, -1}); }
ComplexMatrix cnot() {
  return mat_from_rows(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}
ComplexMatrix swap() {
  return mat_from_rows(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

}  // namespace gate

}  // namespace knotq
