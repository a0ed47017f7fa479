#pragma once

#include "knotq/cmatrix.hpp"
#include "knotq/qnumbers.hpp"

namespace knotq {

// Parity and triangle inequalities only.
bool admissible(int a, int b, int c);
// Also a + b + c <= 2r - 4, the cut-off at A = e^{i pi/2r}.
bool admissible(int a, int b, int c, int r);

// (-1)^{m+n+p} [m+n+p+1]! [m]! [n]! [p]! / ([m+n]! [n+p]! [m+p]!) with
// a = m+p, b = m+n, c = n+p. InvalidArgument for a non-admissible triple,
// NumericError when a denominator factorial vanishes at this A.
Complex theta_net(int a, int b, int c, Complex A);
// Same at A = e^{i pi/2r}, with the level cut-off enforced.
Complex theta_net_at_level(int a, int b, int c, int r);

// f(a,b,c) = sqrt(sqrt([a+1][b+1][c+1]) / Theta-hat) with signs stripped:
// both quantities are taken in absolute value. At A = e^{i pi/2r} they are
// already positive for admissible triples; at the Fibonacci point e^{3 pi i/5}
// some quantum integers are negative and the moduli give the 2-projector
// rescaling. NumericError unless both are nonzero reals.
double vertex_factor(int a, int b, int c, Complex A);
double vertex_factor_at_level(int a, int b, int c, int r);

// (-1)^{(b+c-a)/2} sqrt([b+1][c+1]/[a+1])
double modified_bubble(int a, int b, int c, Complex A);

// Tet value with its four vertices rescaled by their vertex factors.
inline Complex modified_tet(Complex tet, double f1, double f2, double f3, double f4) {
  return tet * (f1 * f2 * f3 * f4);
}
// M[a,b,c,d]_ij = ModTet / ((-1)^{(a+b+c+d)/2} sqrt([a+1][b+1][c+1][d+1])).
// General tetrahedron values are not computed here; the caller supplies ModTet.
Complex recoupling_element(int a, int b, int c, int d, Complex mod_tet, Complex A);

// Nets built from 2-projectors, as functions of the loop value.
struct TwoStrandNets {
  double Delta;  // delta^2 - 1
  double Theta;  // (delta - 1/delta)(delta^2 - 2)
  double T;      // (delta - 1/delta)^2 (delta^2 - 2) - 2 Theta/delta
};
TwoStrandNets two_strand_nets(double delta);

struct FibRecoupling {
  ComplexMatrix raw;        // [[1/Delta, Delta/Theta], [Theta/Delta^2, T Delta/Theta^2]]
  ComplexMatrix symmetric;  // after rescaling the vertices by alpha^2 = sqrt(Delta^3)/Theta
  double alpha2;
};
// Requires delta^2 = delta + 1 to 1e-12.
FibRecoupling fib_recoupling_F(double delta);

}  // namespace knotq
