#include "knotq/gates.hpp"

#include <cmath>
#include <random>

namespace knotq {

namespace {

const double kS = 1.0 / std::sqrt(2.0);
const Complex kI(0, 1);

bool is_real(const Complex& z) { return std::abs(z.imag()) <= 1e-12; }

}  // namespace

TwoQubitState TwoQubitState::from_vector(const ComplexVector& v) {
  if (v.size() != 4) throw InvalidArgument("two-qubit state needs 4 amplitudes");
  return {v(0), v(1), v(2), v(3)};
}

TwoQubitState TwoQubitState::product(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != 2 || y.size() != 2) throw InvalidArgument("product of two qubit states");
  return {x(0) * y(0), x(0) * y(1), x(1) * y(0), x(1) * y(1)};
}

ComplexVector TwoQubitState::vec() const {
  ComplexVector v(4);
  v << a, b, c, d;
  return v;
}

double TwoQubitState::norm() const { return vec().norm(); }

ComplexMatrix bell_r() {
  return mat_from_rows(4, 4, {kS, 0, 0, kS, 0, kS, -kS, 0, 0, kS, kS, 0, -kS, 0, 0, kS});
}

ComplexMatrix r_prime(Complex a, Complex b, Complex c, Complex d) {
  return mat_from_rows(4, 4, {a, 0, 0, 0, 0, 0, b, 0, 0, c, 0, 0, 0, 0, 0, d});
}

ComplexMatrix r_double_prime(Complex a, Complex b, Complex c, Complex d) {
  return mat_from_rows(4, 4, {0, 0, 0, a, 0, b, 0, 0, 0, 0, c, 0, d, 0, 0, 0});
}

ComplexMatrix r_zero() { return r_prime(1, 1, 1, -1); }

ComplexMatrix phase_gate_d() {
  ComplexMatrix d = mat_identity(4);
  d(3, 3) = -1;
  return d;
}

double ybe_residual(const ComplexMatrix& r, bool algebraic) {
  if (r.rows() != 4 || r.cols() != 4) throw InvalidArgument("ybe_check needs a 4x4 matrix");
  const ComplexMatrix b = algebraic ? ComplexMatrix(gate::swap() * r) : r;
  const ComplexMatrix id = mat_identity(2);
  const ComplexMatrix x = mat_tensor(b, id), y = mat_tensor(id, b);
  return mat_dist(x * y * x, y * x * y);
}

bool ybe_check(const ComplexMatrix& r, bool algebraic, double tol) {
  return ybe_residual(r, algebraic) <= tol;
}

bool is_entangled(const TwoQubitState& s, double tol) {
  if (std::abs(s.norm() - 1.0) > 1e-12)
    throw InvalidArgument("is_entangled: state norm " + std::to_string(s.norm()) + " is not 1");
  return std::abs(s.a * s.d - s.b * s.c) > tol;
}

bool is_entangling(const ComplexMatrix& g, std::uint64_t seed, double tol) {
  if (g.rows() != 4 || g.cols() != 4) throw InvalidArgument("is_entangling needs a 4x4 gate");
  auto ket = [](Complex x, Complex y) {
    ComplexVector v(2);
    v << x, y;
    return v;
  };
  auto entangles = [&](const ComplexVector& x, const ComplexVector& y) {
    ComplexVector out = g * TwoQubitState::product(x, y).vec();
    const double n = out.norm();
    if (n < 1e-14) return false;
    TwoQubitState s = TwoQubitState::from_vector(out / n);
    return std::abs(s.a * s.d - s.b * s.c) > tol;
  };
  const std::vector<ComplexVector> first{ket(1, 0), ket(0, 1), ket(kS, kS), ket(kS, kI * kS)};
  const std::vector<ComplexVector> second{ket(1, 0), ket(0, 1), ket(kS, kS), ket(kS, -kS),
                                          ket(kS, kI * kS)};
  for (const auto& x : first)
    for (const auto& y : second)
      if (entangles(x, y)) return true;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto random_ket = [&] {
    ComplexVector v(2);
    v << Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng));
    return ComplexVector(v / v.norm());
  };
  for (int t = 0; t < 100; ++t) {
    ComplexVector x = random_ket();
    ComplexVector y = random_ket();
    if (entangles(x, y)) return true;
  }
  return false;
}

FactorizationReport cnot_from_phase() {
  const ComplexMatrix H = gate::hadamard();
  // The block form diag(H, H): Hadamard on the second factor under the
  // |00>,|01>,|10>,|11> ordering.
  const ComplexMatrix Q = mat_tensor(mat_identity(2), H);
  const ComplexMatrix D = phase_gate_d();
  FactorizationReport rep{"phase", "Q D Q, Q = diag(H, H)", 0, false};
  rep.unitary_factors = is_unitary(Q) && is_unitary(D);
  rep.distance = mat_dist(Q * D * Q, gate::cnot());
  return rep;
}

FactorizationReport cnot_from_r0() {
  const ComplexMatrix H = gate::hadamard();
  const ComplexMatrix sigma = mat_from_rows(2, 2, {kS, kI * kS, kI * kS, kS});
  const ComplexMatrix lambda = mat_from_rows(2, 2, {kS, kS, kI * kS, -kI * kS});
  const ComplexMatrix mu = mat_from_rows(
      2, 2, {(1.0 - kI) / 2.0, (1.0 + kI) / 2.0, (1.0 - kI) / 2.0, (-1.0 - kI) / 2.0});
  const ComplexMatrix R0 = r_zero();
  FactorizationReport rep{"r0", "(lambda x mu)(R0 (I x sigma) R0)(H x H)", 0, false};
  rep.unitary_factors = is_unitary(sigma) && is_unitary(lambda) && is_unitary(mu) &&
                        is_unitary(R0);
  const ComplexMatrix prod = mat_tensor(lambda, mu) * R0 * mat_tensor(mat_identity(2), sigma) *
                             R0 * mat_tensor(H, H);
  rep.distance = mat_dist(prod, gate::cnot());
  return rep;
}

FactorizationReport cnot_from_bell_r() {
  const ComplexMatrix alpha = mat_from_rows(2, 2, {kS, kS, kS, -kS});
  const ComplexMatrix beta = mat_from_rows(2, 2, {-kS, kS, kI * kS, kI * kS});
  const ComplexMatrix gamma = mat_from_rows(2, 2, {kS, kI * kS, kS, -kI * kS});
  const ComplexMatrix delta = mat_from_rows(2, 2, {-1.0, 0, 0, -kI});
  const ComplexMatrix M = mat_tensor(alpha, beta), N = mat_tensor(gamma, delta);
  FactorizationReport rep{"bell_r", "(alpha x beta) R (gamma x delta)", 0, false};
  rep.unitary_factors = is_unitary(M) && is_unitary(N) && is_unitary(bell_r());
  rep.distance = mat_dist(M * bell_r() * N, gate::cnot());
  return rep;
}

ChshObservables chsh_observables() {
  const ComplexMatrix id = mat_identity(2);
  return {mat_tensor(gate::pauli_z(), id), mat_tensor(gate::pauli_x(), id),
          mat_tensor(id, mat_from_rows(2, 2, {-kS, -kS, -kS, kS})),
          mat_tensor(id, mat_from_rows(2, 2, {kS, -kS, -kS, -kS}))};
}

ChshValue chsh_delta(const TwoQubitState& s) {
  static const ChshObservables o = chsh_observables();
  const ComplexVector v = s.vec();
  auto expect = [&](const ComplexMatrix& x, const ComplexMatrix& y) {
    return v.dot(x * y * v).real();
  };
  ChshValue out;
  out.direct = expect(o.Q, o.S) + expect(o.R, o.S) + expect(o.R, o.T) - expect(o.Q, o.T);
  if (is_real(s.a) && is_real(s.b) && is_real(s.c) && is_real(s.d)) {
    const double a = s.a.real(), b = s.b.real(), c = s.c.real(), d = s.d.real();
    out.formula = (2 - 4 * (a + d) * (a + d) + 4 * (a * d - b * c)) / std::sqrt(2.0);
  }
  return out;
}

}  // namespace knotq
