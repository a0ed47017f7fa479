#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotq/errors.hpp"
#include "knotq/laurent.hpp"
#include "knotq/scalar.hpp"

namespace knotq {

// Planar matching of 2n boundary points. Points 0..n-1 run left to right along
// the top, points n..2n-1 left to right along the bottom. pair[p] is p's partner.
struct TLDiagram {
  int n = 0;
  std::vector<std::uint8_t> pair;

  static TLDiagram identity(int n);
  // U_i for 1 <= i <= n-1.
  static TLDiagram cupcap(int n, int i);
  static TLDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& chords);

  bool is_planar() const;
  // x above y. Returns the product and the number of closed loops.
  friend std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y);
  // Top point j joined to bottom point j; number of resulting loops.
  int closure_loops() const;
  // n+k strands, the extra ones through on the right.
  TLDiagram widened(int k) const;
  // "(1,3)(2,4)" style listing of chords.
  std::string str() const;

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;
};

// All planar matchings on n strands (Catalan(n) of them), n <= 12.
std::vector<TLDiagram> tl_enumerate(int n);

template <class Coeff>
class TLElement {
 public:
  TLElement(int n, Coeff delta) : n_(n), delta_(std::move(delta)) {}

  static TLElement identity(int n, Coeff delta, Coeff one) {
    TLElement e(n, std::move(delta));
    e.add(TLDiagram::identity(n), one);
    return e;
  }

  int n() const { return n_; }
  const Coeff& delta() const { return delta_; }
  const std::map<TLDiagram, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TLDiagram& d, const Coeff& c) {
    if (d.n != n_) throw InvalidArgument("TL diagram strand count mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  TLElement& operator+=(const TLElement& o) {
    check(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  TLElement& operator-=(const TLElement& o) {
    check(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }

  friend TLElement operator*(const Coeff& s, const TLElement& x) {
    TLElement out(x.n_, x.delta_);
    for (const auto& [d, c] : x.terms_) out.add(d, s * c);
    return out;
  }

  // x above y; every closed loop contributes a factor delta.
  friend TLElement operator*(const TLElement& x, const TLElement& y) {
    x.check(y);
    TLElement out(x.n_, x.delta_);
    std::vector<Coeff> dpow;
    for (const auto& [dx, cx] : x.terms_)
      for (const auto& [dy, cy] : y.terms_) {
        auto [d, loops] = compose(dx, dy);
        Coeff c = cx * cy;
        while (int(dpow.size()) <= loops) dpow.push_back(dpow.empty() ? Coeff(1) : dpow.back() * x.delta_);
        out.add(d, c * dpow[loops]);
      }
    return out;
  }

  // Appends k through strands on the right.
  TLElement widened(int k) const {
    TLElement out(n_ + k, delta_);
    for (const auto& [d, c] : terms_) out.add(d.widened(k), c);
    return out;
  }

  // Closure with each diagram weighted delta^(loops-1), so the closed identity
  // strand evaluates to 1.
  Coeff closure() const { return closure_with_offset(-1); }
  // Unnormalized closure: delta^loops.
  Coeff trace() const { return closure_with_offset(0); }

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check(const TLElement& o) const {
    if (o.n_ != n_) throw InvalidArgument("TL elements on different strand counts");
  }
  Coeff closure_with_offset(int off) const {
    Coeff total(0);
    for (const auto& [d, c] : terms_) total = total + c * power(delta_, d.closure_loops() + off, Coeff(1));
    return total;
  }

  int n_;
  Coeff delta_;
  std::map<TLDiagram, Coeff> terms_;
};

using TLSymbolic = TLElement<LaurentPoly>;
using TLNumeric = TLElement<Complex>;

// Symbolic generators with delta = -A^2 - A^-2.
TLSymbolic tl_identity(int n);
TLSymbolic tl_generator(int n, int i);
// Numeric generators at a concrete A.
TLNumeric tl_identity(int n, Complex A);
TLNumeric tl_generator(int n, int i, Complex A);

// Jones-Wenzl projector p_n at A. Throws NumericError naming the quantum
// integer [k] that vanishes if the recursion would divide by zero.
TLNumeric jones_wenzl(int n, Complex A);

template <class Coeff>
Coeff tl_closure(const TLElement<Coeff>& x) {
  return x.closure();
}
template <class Coeff>
Coeff tl_trace(const TLElement<Coeff>& x) {
  return x.trace();
}
template <class Coeff>
TLElement<Coeff> tl_mul(const TLElement<Coeff>& x, const TLElement<Coeff>& y) {
  return x * y;
}

// Largest coefficient modulus; used for approximate comparisons.
double max_abs(const TLNumeric& x);

}  // namespace knotq
