#include "knotq/clifford.hpp"

#include <cmath>
#include <sstream>

namespace knotq {

namespace {

// (a + ib)(c + id)
void gauss_mul(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
               Rational& re, Rational& im) {
  re = a * c - b * d;
  im = a * d + b * c;
}

void check_index(int n, int k) {
  if (n < 2 || n > kMaxCliffordGenerators)
    throw InvalidArgument("braiding needs 2..63 generators, got " + std::to_string(n));
  if (k < 1 || k > n - 1)
    throw InvalidArgument("braid index " + std::to_string(k) + " outside 1.." +
                          std::to_string(n - 1));
}

CliffordExact pair_product(int n, int k) {
  return CliffordExact::generator(n, k + 1) * CliffordExact::generator(n, k);
}

}  // namespace

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
  return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  // (x0 + x1 r)(y0 + y1 r) = x0 y0 + 2 x1 y1 + (x0 y1 + x1 y0) r, r = sqrt2
  Rational ar, ai, br, bi, cr, ci, dr, di;
  gauss_mul(x.c_[0], x.c_[1], y.c_[0], y.c_[1], ar, ai);
  gauss_mul(x.c_[2], x.c_[3], y.c_[2], y.c_[3], br, bi);
  gauss_mul(x.c_[0], x.c_[1], y.c_[2], y.c_[3], cr, ci);
  gauss_mul(x.c_[2], x.c_[3], y.c_[0], y.c_[1], dr, di);
  return ExactScalar(ar + 2 * br, ai + 2 * bi, cr + dr, ci + di);
}

Complex ExactScalar::to_complex() const {
  const double r = std::sqrt(2.0);
  return {static_cast<double>(c_[0]) + r * static_cast<double>(c_[2]),
          static_cast<double>(c_[1]) + r * static_cast<double>(c_[3])};
}

std::string ExactScalar::str() const {
  static const char* unit[4] = {"", "i", "sqrt2", "i sqrt2"};
  std::string out;
  for (int j = 0; j < 4; ++j) {
    if (c_[j] == 0) continue;
    if (!out.empty()) out += " + ";
    out += c_[j].str();
    if (j) out += std::string(" ") + unit[j];
  }
  return out.empty() ? "0" : out;
}

std::string scalar_str(const Complex& z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string monomial_str(CliffordMonomial m) {
  std::string out;
  for (int k = 0; m; ++k, m >>= 1)
    if (m & 1) out += (out.empty() ? "c" : " c") + std::to_string(k + 1);
  return out.empty() ? "1" : out;
}

CliffordExact braid_tau(int n, int k) {
  check_index(n, k);
  return ExactScalar::inv_sqrt2() * (CliffordExact::scalar(n, 1) + pair_product(n, k));
}

CliffordExact braid_tau_inverse(int n, int k) {
  check_index(n, k);
  return ExactScalar::inv_sqrt2() * (CliffordExact::scalar(n, 1) - pair_product(n, k));
}

ComplexMatrix conjugation_matrix(int n, int k) {
  check_index(n, k);
  ComplexMatrix t = ComplexMatrix::Identity(n, n);
  // c_k -> c_{k+1}, c_{k+1} -> -c_k
  t(k - 1, k - 1) = 0;
  t(k, k) = 0;
  t(k, k - 1) = 1;
  t(k - 1, k) = -1;
  return t;
}

ComplexMatrix conjugation_matrix_by_algebra(int n, int k) {
  const CliffordExact tau = braid_tau(n, k);
  const CliffordExact tau_inv = braid_tau_inverse(n, k);
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    CliffordExact img = tau * CliffordExact::generator(n, j) * tau_inv;
    for (const auto& [m, s] : img.terms()) {
      if (std::popcount(m) != 1)
        throw NumericError("conjugate of a generator left the span of generators");
      t(std::countr_zero(m), j - 1) = s.to_complex();
    }
  }
  return t;
}

std::pair<CliffordExact, CliffordExact> fermion_pair(int n, int a, int b) {
  if (a == b) throw InvalidArgument("fermion_pair needs two distinct generators");
  const ExactScalar half(Rational(1, 2), 0, 0, 0);
  const ExactScalar half_i(0, Rational(1, 2), 0, 0);
  CliffordExact ca = CliffordExact::generator(n, a);
  CliffordExact cb = CliffordExact::generator(n, b);
  return {half * ca + half_i * cb, half * ca - half_i * cb};
}

QuaternionTriple clifford_quaternions(int n, int a, int b, int c) {
  if (a == b || b == c || a == c)
    throw InvalidArgument("quaternion triple needs three distinct generators");
  auto g = [n](int k) { return CliffordExact::generator(n, k); };
  return {g(b) * g(a), g(c) * g(b), g(a) * g(c)};
}

}  // namespace knotq
