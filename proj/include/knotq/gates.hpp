#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotq/cmatrix.hpp"

namespace knotq {

// a|00> + b|01> + c|10> + d|11>
struct TwoQubitState {
  Complex a, b, c, d;

  static TwoQubitState from_vector(const ComplexVector& v);
  static TwoQubitState product(const ComplexVector& x, const ComplexVector& y);
  ComplexVector vec() const;
  double norm() const;
};

// The Bell-basis change matrix.
ComplexMatrix bell_r();
// a, b, c, d unit complex numbers in both families.
ComplexMatrix r_prime(Complex a, Complex b, Complex c, Complex d);
ComplexMatrix r_double_prime(Complex a, Complex b, Complex c, Complex d);
// r_prime(1, 1, 1, -1)
ComplexMatrix r_zero();
ComplexMatrix phase_gate_d();

// Braided form (R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R).
// With algebraic set, r is read as a solution of R12 R13 R23 = R23 R13 R12
// and checked through SWAP r.
bool ybe_check(const ComplexMatrix& r, bool algebraic = false, double tol = 1e-12);
double ybe_residual(const ComplexMatrix& r, bool algebraic = false);

// |ad - bc| > tol. Throws InvalidArgument unless the state has norm 1 to 1e-12.
bool is_entangled(const TwoQubitState& s, double tol = 1e-12);

// Entangling test for a 4x4 gate: does it send some product state to an
// entangled one? Tries a fixed grid of 20 product states, then 100 random
// product states drawn from seed.
bool is_entangling(const ComplexMatrix& g, std::uint64_t seed = 7, double tol = 1e-9);

struct FactorizationReport {
  std::string name;
  std::string expression;
  double distance = 0;  // mat_dist to canonical CNOT
  bool unitary_factors = false;
  bool passed(double tol = 1e-12) const { return unitary_factors && distance <= tol; }
};

// CNOT = Q D Q with Q the block-diagonal Hadamard pair (I (x) H here).
FactorizationReport cnot_from_phase();
// CNOT = (lambda (x) mu)(R0 (I (x) sigma) R0)(H (x) H)
FactorizationReport cnot_from_r0();
// CNOT = (alpha (x) beta) R (gamma (x) delta)
FactorizationReport cnot_from_bell_r();

// The CHSH observables: Q, R on the first factor, S, T on the second.
struct ChshObservables {
  ComplexMatrix Q, R, S, T;
};
ChshObservables chsh_observables();

struct ChshValue {
  std::optional<double> formula;  // only for real amplitudes
  double direct = 0;
};
// direct = <QS> + <RS> + <RT> - <QT>; formula = (2 - 4(a+d)^2 + 4(ad-bc))/sqrt2.
ChshValue chsh_delta(const TwoQubitState& s);

}  // namespace knotq
