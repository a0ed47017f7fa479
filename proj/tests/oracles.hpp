#pragma once
// Independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotq/laurent.hpp"
#include "knotq/linkdata.hpp"

namespace oracle {

using knotq::BigInt;
using knotq::LaurentPoly;

// State sum with loops counted by walking an explicit adjacency list, rather
// than the union-find of the library. Coefficients kept as a plain map.
inline LaurentPoly bracket(const knotq::PDCode& d) {
  const size_t n = d.crossings.size();
  std::map<int, std::vector<int>> ends_of;  // arc -> list of endpoint ids
  std::vector<int> arc_of;                  // endpoint id -> arc
  for (size_t k = 0; k < n; ++k)
    for (int s = 0; s < 4; ++s) {
      ends_of[d.crossings[k].arcs[s]].push_back(int(arc_of.size()));
      arc_of.push_back(d.crossings[k].arcs[s]);
    }
  std::map<std::pair<int, int>, long long> tally;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    // endpoint e (= 4k+s); partner across the arc and partner inside the smoothing
    std::vector<int> inside(4 * n);
    int na = 0;
    for (size_t k = 0; k < n; ++k) {
      int b = int(4 * k);
      if (mask >> k & 1) {
        inside[b] = b + 3, inside[b + 3] = b, inside[b + 1] = b + 2, inside[b + 2] = b + 1;
      } else {
        ++na;
        inside[b] = b + 1, inside[b + 1] = b, inside[b + 2] = b + 3, inside[b + 3] = b + 2;
      }
    }
    std::vector<char> seen(4 * n, 0);
    int loops = 0;
    for (size_t e0 = 0; e0 < 4 * n; ++e0) {
      if (seen[e0]) continue;
      ++loops;
      int e = int(e0);
      while (!seen[e]) {
        seen[e] = 1;
        const auto& pr = ends_of[arc_of[e]];
        int across = pr[0] == e ? pr[1] : pr[0];
        seen[across] = 1;
        e = inside[across];
      }
    }
    ++tally[{na - int(n - na), loops + d.free_loops}];
  }
  LaurentPoly delta = knotq::loop_value();
  LaurentPoly out;
  for (auto [key, c] : tally) out += LaurentPoly::monomial(key.first, BigInt(c)) * delta.pow(unsigned(key.second - 1));
  return out;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int terms = 5, int span = 8, int mag = 20) {
  std::uniform_int_distribution<int> e(-span, span), c(-mag, mag);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(e(rng), BigInt(c(rng)));
  return p;
}

inline long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// Fibonacci numbers with f0 = f1 = 1.
inline long long fib(int n) {
  long long a = 1, b = 1;
  for (int k = 0; k < n; ++k) {
    long long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// p + q sqrt5 over the rationals, for exact golden-ratio identities.
struct QSqrt5 {
  using Q = boost::multiprecision::cpp_rational;
  Q p, q;
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.p * y.p + 5 * x.q * y.q, x.p * y.q + x.q * y.p};
  }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.p - y.p, x.q - y.q}; }
  QSqrt5 inverse() const {
    Q n = p * p - 5 * q * q;
    return {p / n, -q / n};
  }
  bool operator==(const QSqrt5&) const = default;
};

}  // namespace oracle
