#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotq/cmatrix.hpp"
#include "knotq/errors.hpp"
#include "knotq/scalar.hpp"

namespace knotq {

using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(i, sqrt2): (p0 + i q0) + (p1 + i q1) sqrt2.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT implicit on purpose
  ExactScalar(Rational re, Rational im, Rational re2, Rational im2)
      : c_{std::move(re), std::move(im), std::move(re2), std::move(im2)} {}

  static ExactScalar i() { return {0, 1, 0, 0}; }
  static ExactScalar sqrt2() { return {0, 0, 1, 0}; }
  static ExactScalar inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  Complex to_complex() const;
  std::string str() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator-(const ExactScalar& a) { return ExactScalar() - a; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero_coeff(const ExactScalar& s) { return s.is_zero(); }
inline std::string scalar_str(const ExactScalar& s) { return s.str(); }
std::string scalar_str(const Complex& z);
inline Complex to_complex(const ExactScalar& s) { return s.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

// Monomial c_{i1} c_{i2} ... with i1 < i2 < ..., stored as a bitmask (bit k-1
// for c_k). Signs from reordering live in the coefficient.
using CliffordMonomial = std::uint64_t;

inline constexpr int kMaxCliffordGenerators = 63;

// Sign of m1 * m2 once rewritten in ascending order: each generator of m2 has
// to pass every larger generator of m1.
inline int monomial_sign(CliffordMonomial m1, CliffordMonomial m2) {
  int swaps = 0;
  while (m2) {
    int j = std::countr_zero(m2);
    m2 &= m2 - 1;
    swaps += std::popcount(m1 >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::string monomial_str(CliffordMonomial m);

template <class Scalar>
class CliffordElement {
 public:
  explicit CliffordElement(int n) : n_(n) {
    if (n < 1 || n > kMaxCliffordGenerators)
      throw InvalidArgument("Clifford generator count out of range: " + std::to_string(n));
  }

  static CliffordElement scalar(int n, const Scalar& s) {
    CliffordElement e(n);
    e.add(0, s);
    return e;
  }
  // c_k, 1 <= k <= n
  static CliffordElement generator(int n, int k) {
    CliffordElement e(n);
    if (k < 1 || k > n) throw InvalidArgument("Clifford generator index out of range");
    e.add(CliffordMonomial{1} << (k - 1), Scalar(1));
    return e;
  }

  int n() const { return n_; }
  const std::map<CliffordMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(CliffordMonomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(CliffordMonomial m, const Scalar& s) {
    auto [it, fresh] = terms_.try_emplace(m, s);
    if (!fresh) it->second += s;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    same_n(o);
    for (const auto& [m, s] : o.terms_) add(m, s);
    return *this;
  }
  CliffordElement& operator-=(const CliffordElement& o) {
    same_n(o);
    for (const auto& [m, s] : o.terms_) add(m, -s);
    return *this;
  }
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator-(const CliffordElement& a) { return CliffordElement(a.n_) - a; }

  friend CliffordElement operator*(const Scalar& s, const CliffordElement& x) {
    CliffordElement out(x.n_);
    for (const auto& [m, c] : x.terms_) out.add(m, s * c);
    return out;
  }

  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    x.same_n(y);
    CliffordElement out(x.n_);
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) {
        Scalar c = cx * cy;
        if (monomial_sign(mx, my) < 0) c = -c;
        out.add(mx ^ my, c);
      }
    return out;
  }

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + scalar_str(c) + ")";
      if (m) out += " " + monomial_str(m);
    }
    return out;
  }

 private:
  void same_n(const CliffordElement& o) const {
    if (o.n_ != n_) throw InvalidArgument("Clifford elements over different generator counts");
  }

  int n_;
  std::map<CliffordMonomial, Scalar> terms_;
};

using CliffordExact = CliffordElement<ExactScalar>;
using CliffordNumeric = CliffordElement<Complex>;

template <class Scalar>
CliffordElement<Scalar> cl_mul(const CliffordElement<Scalar>& x, const CliffordElement<Scalar>& y) {
  return x * y;
}

// tau_k = (1 + c_{k+1} c_k)/sqrt2 and its inverse (1 - c_{k+1} c_k)/sqrt2.
CliffordExact braid_tau(int n, int k);
CliffordExact braid_tau_inverse(int n, int k);

// Matrix of x -> tau_k x tau_k^-1 on span{c_1..c_n}; column j is the image of c_{j+1}.
ComplexMatrix conjugation_matrix(int n, int k);
// Same matrix, read off by conjugating in the algebra rather than from the
// closed form. Used to cross-check the closed form.
ComplexMatrix conjugation_matrix_by_algebra(int n, int k);

// psi = (c_a + i c_b)/2, psi^dagger = (c_a - i c_b)/2.
std::pair<CliffordExact, CliffordExact> fermion_pair(int n, int a, int b);

struct QuaternionTriple {
  CliffordExact I, J, K;
};
// I = c_b c_a, J = c_c c_b, K = c_a c_c for distinct generators a, b, c.
QuaternionTriple clifford_quaternions(int n, int a, int b, int c);

}  // namespace knotq
