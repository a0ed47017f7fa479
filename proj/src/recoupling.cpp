#include "knotq/recoupling.hpp"

#include <cmath>
#include <string>

namespace knotq {

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

struct Mnp {
  int m, n, p;
};

Mnp reparam(int a, int b, int c) {
  if (!admissible(a, b, c)) throw InvalidArgument("triple " + triple_str(a, b, c) + " is not admissible");
  return {(a + b - c) / 2, (b + c - a) / 2, (a + c - b) / 2};
}

// Theta without its sign.
Complex theta_hat(int a, int b, int c, Complex A) {
  auto [m, n, p] = reparam(a, b, c);
  Complex den = quantum_factorial(m + n, A) * quantum_factorial(n + p, A) *
                quantum_factorial(m + p, A);
  if (std::abs(den) < 1e-12)
    throw NumericError("theta net " + triple_str(a, b, c) + ": denominator vanishes at this A");
  return quantum_factorial(m + n + p + 1, A) * quantum_factorial(m, A) *
         quantum_factorial(n, A) * quantum_factorial(p, A) / den;
}

// |z| for z real and nonzero.
double real_modulus(Complex z, const std::string& what) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z)) || std::abs(z.real()) <= 1e-14)
    throw NumericError(what + ": value is not a nonzero real");
  return std::abs(z.real());
}

double positive_real(Complex z, const std::string& what) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z)) || z.real() <= 1e-14)
    throw NumericError(what + ": radicand is not positive real");
  return z.real();
}

void check_level(int a, int b, int c, int r) {
  if (!admissible(a, b, c, r))
    throw InvalidArgument("triple " + triple_str(a, b, c) + " is not admissible at r = " +
                          std::to_string(r));
}

}  // namespace

bool admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2) return false;
  return a <= b + c && b <= a + c && c <= a + b;
}

bool admissible(int a, int b, int c, int r) {
  return admissible(a, b, c) && a + b + c <= 2 * r - 4;
}

Complex theta_net(int a, int b, int c, Complex A) {
  const int sign = ((a + b + c) / 2) % 2 ? -1 : 1;
  return double(sign) * theta_hat(a, b, c, A);
}

Complex theta_net_at_level(int a, int b, int c, int r) {
  check_level(a, b, c, r);
  return theta_net(a, b, c, root_of_unity_A(r));
}

double vertex_factor(int a, int b, int c, Complex A) {
  const std::string what = "vertex factor " + triple_str(a, b, c);
  const double q = real_modulus(quantum_int(a + 1, A) * quantum_int(b + 1, A) *
                                     quantum_int(c + 1, A), what);
  const double t = real_modulus(theta_hat(a, b, c, A), what);
  return std::sqrt(std::sqrt(q) / t);
}

double vertex_factor_at_level(int a, int b, int c, int r) {
  check_level(a, b, c, r);
  return vertex_factor(a, b, c, root_of_unity_A(r));
}

double modified_bubble(int a, int b, int c, Complex A) {
  auto [m, n, p] = reparam(a, b, c);
  (void)m;
  (void)p;
  const double q = positive_real(
      quantum_int(b + 1, A) * quantum_int(c + 1, A) / quantum_int(a + 1, A),
      "modified bubble " + triple_str(a, b, c));
  return (n % 2 ? -1.0 : 1.0) * std::sqrt(q);
}

Complex recoupling_element(int a, int b, int c, int d, Complex mod_tet, Complex A) {
  if ((a + b + c + d) % 2) throw InvalidArgument("recoupling element: odd label sum");
  const double q = positive_real(quantum_int(a + 1, A) * quantum_int(b + 1, A) *
                                     quantum_int(c + 1, A) * quantum_int(d + 1, A),
                                 "recoupling element");
  const double sign = ((a + b + c + d) / 2) % 2 ? -1.0 : 1.0;
  return mod_tet / (sign * std::sqrt(q));
}

TwoStrandNets two_strand_nets(double delta) {
  if (delta == 0.0) throw InvalidArgument("two_strand_nets: delta = 0");
  const double e = delta - 1.0 / delta;
  TwoStrandNets out;
  out.Delta = delta * delta - 1.0;
  out.Theta = e * (delta * delta - 2.0);
  out.T = e * e * (delta * delta - 2.0) - 2.0 * out.Theta / delta;
  return out;
}

FibRecoupling fib_recoupling_F(double delta) {
  if (std::abs(delta * delta - delta - 1.0) > 1e-12)
    throw InvalidArgument("fib_recoupling_F: delta^2 != delta + 1 (delta = " +
                          std::to_string(delta) + ")");
  const auto [D, Th, T] = two_strand_nets(delta);
  FibRecoupling out;
  out.raw = mat_from_rows(2, 2, {1.0 / D, D / Th, Th / (D * D), T * D / (Th * Th)});
  out.alpha2 = std::sqrt(D * D * D) / Th;
  // Rescaling each P-P-P vertex by alpha conjugates F by diag(1, alpha^2).
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(1, 1) = out.alpha2;
  out.symmetric = s * out.raw * s.inverse();
  return out;
}

}  // namespace knotq
