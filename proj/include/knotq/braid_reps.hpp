#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotq/cmatrix.hpp"
#include "knotq/linkdata.hpp"

namespace knotq {

// a + bI + cJ + dK with I = diag(i,-i), J = [[0,1],[-1,0]], K = [[0,i],[i,0]].
struct Quaternion {
  double a = 1, b = 0, c = 0, d = 0;

  double norm() const;
  Quaternion conj() const { return {a, -b, -c, -d}; }
  Quaternion inverse() const;
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
  }
  friend Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.a, s * q.b, s * q.c, s * q.d};
  }
};

using Vec3 = std::array<double, 3>;

double quat_dist(const Quaternion& p, const Quaternion& q);
ComplexMatrix quat_to_matrix(const Quaternion& q);

// g = a + b u, h = a + b v with a = cos(theta/2), b = sin(theta/2), so theta is
// the rotation angle of conjugation by g. Requires u.v = (a^2 - b^2)/(2 b^2)
// within 1e-10; throws InvalidArgument otherwise.
std::pair<Quaternion, Quaternion> su2_braid_pair(double theta, const Vec3& u, const Vec3& v);
// A unit v making (theta, u, v) admissible: u rotated toward a fixed
// perpendicular until the dot product is right. Throws if |u.v| would exceed 1.
Vec3 su2_partner(double theta, const Vec3& u);

// Generator images for B_n; gens[i] is the image of s_{i+1}.
struct RepMatrixSet {
  int strands = 0;
  std::vector<ComplexMatrix> gens;
  std::vector<ComplexMatrix> inverse_gens;
  std::string label;
};

struct RepCheck {
  double unitarity_error = 0;
  double braid_error = 0;     // s_i s_{i+1} s_i vs s_{i+1} s_i s_{i+1}
  double commute_error = 0;   // distant generators
  double inverse_error = 0;   // gens[i] * inverse_gens[i] vs I
  bool ok(double tol = 1e-10) const {
    return unitarity_error <= tol && braid_error <= tol && commute_error <= tol &&
           inverse_error <= tol;
  }
};

RepCheck check_rep(const RepMatrixSet& rep);
// Image of a braid word (letters applied top to bottom, so b1 b2 -> rho(b1) rho(b2)).
ComplexMatrix rep_image(const RepMatrixSet& rep, const BraidWord& b);

// d = -2 cos 2 theta. |d| >= 1 exactly on the unitary ranges.
bool tl_two_by_two_admissible(double theta);
// Phi(s_i) = A + A^-1 U_i with A = e^{i theta}. Throws InvalidArgument outside
// the unitary ranges.
RepMatrixSet tl_two_by_two(double theta);
// Same construction for any theta with d != 0; complex square roots outside
// the unitary ranges, so the images stop being unitary there.
RepMatrixSet tl_two_by_two_unchecked(double theta);
// U_1, U_2 behind tl_two_by_two.
std::pair<ComplexMatrix, ComplexMatrix> tl_two_by_two_projections(double theta);

// F = [[tau, sqrt tau], [sqrt tau, -tau]], tau = 1/phi; R = diag(e^{4 pi i/5},
// -e^{2 pi i/5}). Basis (|*>, |P>).
std::pair<ComplexMatrix, ComplexMatrix> fibonacci_local();
// 3 strands: s1 -> R, s2 -> F R F.
RepMatrixSet fibonacci_fr_rep();

// Strings over {P, *} with no "**", '*' ordered before 'P'. n <= 20.
using FibState = std::string;
std::vector<FibState> fib_basis(int n);
inline constexpr int kMaxFibLength = 20;

struct FibParams {
  double delta, a, b;
};
// delta = phi, a = 1/delta, b = sqrt(1 - a^2).
FibParams fib_params();

enum class FibEndRule {
  Flanked,   // every U_i uses the middle rules with flanks * P ... P
  Verbatim,  // U_{n+1}|...P*> = 0 taken literally; breaks U^2 = delta U
};

// Matrix of U_i (1 <= i <= n+1) on fib_basis(n).
ComplexMatrix fib_tl_generator(int n, int i, FibEndRule rule = FibEndRule::Flanked);
// rho(s_i) = A + A^-1 U_i at A = e^{3 pi i/5}, on n+2 strands.
RepMatrixSet fib_braid_rep(int n);

// Projective distance sqrt(1 - |tr(U^dagger V)|/2) on 2x2 unitaries.
double projective_dist(const ComplexMatrix& u, const ComplexMatrix& v);

struct DensityReport {
  double radius = 0;        // worst target's distance to the nearest word
  std::size_t elements = 0;  // distinct elements after dedup
};
// Breadth-first words of length <= depth in the generators of a 2-dim rep and
// their inverses, deduplicated on a 1e-3 grid (up to phase), against Haar
// random SU(2) targets. A smoke check, not a density proof.
DensityReport density_smoke(const RepMatrixSet& rep, int depth, int targets = 100,
                            std::uint64_t seed = 1);

}  // namespace knotq
