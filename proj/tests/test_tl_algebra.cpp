#include <doctest.h>

#include <random>
#include <functional>
#include <set>

#include "knotq/qnumbers.hpp"
#include "knotq/tl_algebra.hpp"
#include "oracles.hpp"

using namespace knotq;

namespace {

// Brute force: all perfect matchings of 2n points, keep those with no
// interleaved chord pair in boundary order.
long long count_planar_brute(int n) {
  auto circ = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  std::vector<int> match(2 * n, -1);
  long long count = 0;
  std::function<void()> rec = [&] {
    int p = 0;
    while (p < 2 * n && match[p] >= 0) ++p;
    if (p == 2 * n) {
      for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
          int x1 = circ(a), y1 = circ(match[a]), x2 = circ(b), y2 = circ(match[b]);
          if (x1 > y1) std::swap(x1, y1);
          if (x2 > y2) std::swap(x2, y2);
          if (x1 < x2 && x2 < y1 && y1 < y2) return;
        }
      ++count;
      return;
    }
    for (int q = p + 1; q < 2 * n; ++q)
      if (match[q] < 0) {
        match[p] = q, match[q] = p;
        rec();
        match[p] = match[q] = -1;
      }
  };
  rec();
  return count;
}

TLSymbolic U(int n, int i) { return tl_generator(n, i); }

bool near_zero(const TLNumeric& x, double tol) { return max_abs(x) <= tol; }

}  // namespace

TEST_SUITE("tl_algebra") {
  TEST_CASE("generator examples") {
    auto u = tl_enumerate(2);
    CHECK(U(2, 1).terms().size() == 1);
    CHECK(U(2, 1).terms().begin()->first != TLDiagram::identity(2));
    CHECK(U(3, 2).terms().begin()->first == TLDiagram::from_pairs(3, {{0, 3}, {1, 2}, {4, 5}}));
    CHECK_THROWS_AS(U(3, 3), InvalidArgument);
    CHECK_THROWS_AS(U(3, 0), InvalidArgument);
  }

  TEST_CASE("multiplication examples") {
    LaurentPoly d = loop_value();
    CHECK(U(2, 1) * U(2, 1) == d * U(2, 1));
    CHECK(U(3, 1) * U(3, 2) * U(3, 1) == U(3, 1));
    CHECK(U(4, 1) * U(4, 3) == U(4, 3) * U(4, 1));
    CHECK_THROWS_AS(U(3, 1) * U(4, 1), InvalidArgument);
  }

  TEST_CASE("enumeration counts") {
    CHECK(tl_enumerate(1).size() == 1);
    CHECK(tl_enumerate(2).size() == 2);
    CHECK(tl_enumerate(3).size() == 5);
    for (int n = 1; n <= 5; ++n) CHECK((long long)tl_enumerate(n).size() == count_planar_brute(n));
    for (int n = 1; n <= 10; ++n) {
      auto all = tl_enumerate(n);
      CHECK((long long)all.size() == oracle::catalan(n));
      std::set<TLDiagram> uniq(all.begin(), all.end());
      CHECK(uniq.size() == all.size());
      for (const auto& d : all) CHECK(d.is_planar());
    }
    CHECK_THROWS_AS(tl_enumerate(13), BoundExceeded);
  }

  TEST_CASE("planarity check rejects crossed chords") {
    TLDiagram x{2, {3, 2, 1, 0}};  // top0-bottom1, top1-bottom0
    CHECK_FALSE(x.is_planar());
    CHECK_THROWS_AS(TLDiagram::from_pairs(2, {{0, 3}, {1, 2}}), InvalidArgument);
  }

  TEST_CASE("defining relations for n <= 6, exact") {
    LaurentPoly d = loop_value();
    for (int n = 2; n <= 6; ++n)
      for (int i = 1; i < n; ++i) {
        CHECK(U(n, i) * U(n, i) == d * U(n, i));
        if (i + 1 < n) {
          CHECK(U(n, i) * U(n, i + 1) * U(n, i) == U(n, i));
          CHECK(U(n, i + 1) * U(n, i) * U(n, i + 1) == U(n, i + 1));
        }
        for (int j = i + 2; j < n; ++j) CHECK(U(n, i) * U(n, j) == U(n, j) * U(n, i));
      }
  }

  TEST_CASE("composition is associative on random diagrams") {
    std::mt19937_64 rng(23);
    auto all = tl_enumerate(5);
    for (int t = 0; t < 300; ++t) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      const auto& c = all[rng() % all.size()];
      auto [ab, l1] = compose(a, b);
      auto [abc, l2] = compose(ab, c);
      auto [bc, l3] = compose(b, c);
      auto [abc2, l4] = compose(a, bc);
      CHECK(abc == abc2);
      CHECK(l1 + l2 == l3 + l4);
    }
  }

  TEST_CASE("closure examples") {
    CHECK(tl_closure(tl_identity(1)) == LaurentPoly(1));
    CHECK(tl_closure(U(2, 1)) == LaurentPoly(1));
    CHECK(tl_trace(U(2, 1)) == loop_value());
    CHECK(tl_closure(tl_identity(3)) == loop_value() * loop_value());

    Complex A = std::polar(1.0, 0.37);
    TLNumeric p2 = jones_wenzl(2, A);
    Complex d2 = A * A * A * A + 1.0 + 1.0 / (A * A * A * A);
    CHECK(std::abs(tl_trace(p2) - d2) < 1e-12);
    CHECK(std::abs(tl_closure(p2) - d2 / loop_value_at(A)) < 1e-12);
  }

  TEST_CASE("Jones-Wenzl p1, p2") {
    Complex A = std::polar(1.0, M_PI / 10);
    TLNumeric p1 = jones_wenzl(1, A);
    CHECK(p1 == tl_identity(1, A));
    TLNumeric p2 = jones_wenzl(2, A);
    TLNumeric expect = tl_identity(2, A) - (1.0 / loop_value_at(A)) * tl_generator(2, 1, A);
    CHECK(near_zero(p2 - expect, 1e-14));
    TLNumeric p3 = jones_wenzl(3, A);
    CHECK(near_zero(p3 * p3 - p3, 1e-10));
  }

  TEST_CASE("Jones-Wenzl idempotent, annihilated by caps, closes to Delta_n") {
    for (int n = 1; n <= 5; ++n)
      for (int r = n + 2; r <= n + 5; ++r) {
        Complex A = root_of_unity_A(r);
        TLNumeric p = jones_wenzl(n, A);
        CHECK(near_zero(p * p - p, 1e-10));
        for (int i = 1; i < n; ++i) {
          CHECK(near_zero(tl_generator(n, i, A) * p, 1e-10));
          CHECK(near_zero(p * tl_generator(n, i, A), 1e-10));
        }
        Complex closed = (n % 2 ? -1.0 : 1.0) * std::sin((n + 1) * M_PI / r) / std::sin(M_PI / r);
        CHECK(std::abs(tl_trace(p) - closed) < 1e-10);
      }
  }

  TEST_CASE("Jones-Wenzl failure names the vanishing quantum integer") {
    Complex A = root_of_unity_A(3);  // [3] = 0
    CHECK_NOTHROW(jones_wenzl(2, A));
    try {
      jones_wenzl(3, A);
      FAIL("expected NumericError");
    } catch (const NumericError& e) {
      CHECK(std::string(e.what()).find("[3]") != std::string::npos);
    }
  }

  TEST_CASE("widening keeps products") {
    Complex A = std::polar(1.0, 0.9);
    TLNumeric x = tl_generator(3, 1, A) + tl_generator(3, 2, A);
    TLNumeric y = tl_generator(3, 2, A);
    CHECK(near_zero((x * y).widened(2) - x.widened(2) * y.widened(2), 1e-13));
  }
}
