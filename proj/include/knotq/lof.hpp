#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotq/cmatrix.hpp"

namespace knotq {

// A mark and whatever it contains.
struct Mark {
  std::vector<Mark> inside;
  bool operator==(const Mark&) const = default;
};

// An ordered forest of marks. The empty forest is the unmarked state.
struct MarkExpr {
  std::vector<Mark> marks;
  bool operator==(const MarkExpr&) const = default;

  std::size_t count() const;  // total number of marks
  std::size_t depth() const;  // 0 for the empty expression
};

// Nesting deeper than this is rejected with BoundExceeded (keeps the
// recursive walks off the end of the stack).
inline constexpr std::size_t kMaxMarkDepth = 4096;

// expr := mark* ; mark := '<' expr '>'. Whitespace is skipped, anything
// else is a ParseError with its offset.
MarkExpr lof_parse(std::string_view text);
std::string lof_render(const MarkExpr& e);

enum class LofValue { Unmarked, Marked };
const char* lof_value_name(LofValue v);  // "marked" / "unmarked"

enum class LofStrategy {
  DeepestFirst,      // leftmost among the deepest marks
  LeftmostOutermost  // first redex in preorder
};

// One calling or crossing step. Returns false when e is already <> or void.
bool lof_step(MarkExpr& e, LofStrategy s = LofStrategy::DeepestFirst);

LofValue lof_reduce(const MarkExpr& e, LofStrategy s = LofStrategy::DeepestFirst);
// Every intermediate expression, starting with e itself.
std::vector<std::string> lof_reduce_trace(const MarkExpr& e,
                                          LofStrategy s = LofStrategy::DeepestFirst);

// Boolean reading: a mark negates its contents, juxtaposition is OR, void is F.
LofValue lof_boolean_oracle(const MarkExpr& e);

// Every ordered forest with exactly n marks (Catalan(n) of them).
std::vector<MarkExpr> lof_enumerate(std::size_t n);

// [p,q] + [r,s] eta, with [a,b] eta = eta [b,a] and eta eta = 1.
struct Iterant {
  Complex p = 0, q = 0, r = 0, s = 0;

  static Iterant diag(Complex a, Complex b) { return {a, b, 0, 0}; }
  static Iterant eta() { return {0, 0, 1, 1}; }
  static Iterant scalar(Complex c) { return {c, c, 0, 0}; }
};

Iterant iterant_mul(const Iterant& x, const Iterant& y);
Iterant operator*(const Iterant& x, const Iterant& y);
Iterant operator*(Complex c, const Iterant& x);
Iterant operator+(const Iterant& x, const Iterant& y);
Iterant operator-(const Iterant& x, const Iterant& y);
Iterant operator-(const Iterant& x);
// The conjugate-transpose under the matrix picture.
Iterant iterant_dagger(const Iterant& x);
double iterant_dist(const Iterant& x, const Iterant& y);

// [a,b] -> diag(a,b), eta -> [[0,1],[1,0]]
ComplexMatrix iterant_matrix(const Iterant& x);
Iterant iterant_from_matrix(const ComplexMatrix& m);

// e = [1,-1], and the iterant square root of -1, i = [1,-1] eta.
Iterant iterant_e();
Iterant iterant_i();

// Majorana triple a = e, b = eta, c = i e eta (i a commuting scalar here),
// I = ba = eta e, J = cb = i e, K = ac = i eta.
struct IterantQuaternions {
  Iterant a, b, c;
  Iterant I, J, K;
};
IterantQuaternions iterant_quaternions();

struct DiracCheck {
  ComplexMatrix U;
  double identity_residual = 0;  // ||U^2 - (-E^2 + p^2 + m^2) I||
  double u_squared_norm = 0;     // ||U^2||, zero on shell
};

// U = beta alpha E + beta p + alpha m, alpha = diag(-1, 1), beta = [[0,1],[1,0]].
DiracCheck dirac_nilpotent(double E, double p, double m);
// U = -i eta E + i e eta p + e m in the same matrices.
ComplexMatrix rowland_u(double E, double p, double m);

}  // namespace knotq
