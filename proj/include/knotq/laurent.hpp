#pragma once

#include <complex>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotq {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

// Laurent polynomial in A with integer coefficients. Terms with a zero
// coefficient are never stored, so two equal polynomials have equal maps.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(int exp, const BigInt& coeff = 1);
  static LaurentPoly from_terms(Terms t);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exp) const;
  // Only meaningful when !is_zero().
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  // Multiply by A^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned k) const;

  // A -> A^-1.
  LaurentPoly mirror() const;
  Complex eval(Complex a) const;

  // "-A^5 - A^-3 + A^-7", highest exponent first. "0" for the zero polynomial.
  std::string str() const;
  static LaurentPoly parse(const std::string& text);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exp, const BigInt& c);
  Terms terms_;
};

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
inline LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

inline LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly lp_mirror(const LaurentPoly& p) { return p.mirror(); }
inline Complex lp_eval(const LaurentPoly& p, Complex a) { return p.eval(a); }

// The loop value -A^2 - A^-2.
LaurentPoly loop_value();

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace knotq
