#pragma once

#include <cmath>
#include <complex>

#include "knotq/laurent.hpp"

namespace knotq {

inline Complex loop_value_at(Complex A) { return -A * A - 1.0 / (A * A); }

// A = e^{i pi / 2r}
inline Complex root_of_unity_A(int r) { return std::polar(1.0, M_PI / (2.0 * r)); }
// A = e^{3 pi i / 5}, the Fibonacci point.
inline Complex fibonacci_A() { return std::polar(1.0, 3.0 * M_PI / 5.0); }

// [n] = (A^2n - A^-2n) / (A^2 - A^-2). Throws InvalidArgument when A^2 = A^-2.
Complex quantum_int(int n, Complex A);
// Delta_n = (-1)^n [n+1], the closure of the n-strand projector.
Complex delta_n(int n, Complex A);
// Delta_n through the recursion Delta_{k+1} = delta Delta_k - Delta_{k-1};
// defined for every nonzero A.
Complex loop_chebyshev(int n, Complex A);
// [n]! with [0]! = 1.
Complex quantum_factorial(int n, Complex A);

}  // namespace knotq
