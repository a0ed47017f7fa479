#include "knotq/qnumbers.hpp"

#include "knotq/errors.hpp"

namespace knotq {

Complex quantum_int(int n, Complex A) {
  Complex a2 = A * A;
  Complex den = a2 - 1.0 / a2;
  if (std::abs(den) < 1e-14) throw InvalidArgument("quantum integer undefined: A^2 = A^-2");
  return (std::pow(a2, n) - std::pow(a2, -n)) / den;
}

Complex delta_n(int n, Complex A) { return (n % 2 ? -1.0 : 1.0) * quantum_int(n + 1, A); }

Complex loop_chebyshev(int n, Complex A) {
  Complex d = loop_value_at(A);
  Complex prev = 1.0, cur = d;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Complex next = d * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex quantum_factorial(int n, Complex A) {
  Complex f = 1.0;
  for (int k = 2; k <= n; ++k) f *= quantum_int(k, A);
  return f;
}

}  // namespace knotq
