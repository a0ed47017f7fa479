#pragma once

#include <complex>

#include "knotq/laurent.hpp"

namespace knotq {

// Exact zero test for the coefficient types used by the templated containers.
inline bool is_zero_coeff(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero_coeff(const Complex& z) { return z == Complex(0.0); }

template <class T>
T power(const T& base, int k, const T& one) {
  T r = one;
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

}  // namespace knotq
