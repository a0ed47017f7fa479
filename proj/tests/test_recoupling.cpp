#include <doctest.h>

#include <random>

#include "knotq/braid_reps.hpp"
#include "knotq/recoupling.hpp"

using namespace knotq;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

}  // namespace

TEST_SUITE("recoupling") {

TEST_CASE("quantum integers") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ang(0.1, 1.4);
  for (int t = 0; t < 20; ++t) {
    Complex A = std::polar(1.0, ang(rng));
    CHECK(std::abs(quantum_int(1, A) - 1.0) < 1e-12);
    CHECK(std::abs(quantum_int(2, A) - (A * A + 1.0 / (A * A))) < 1e-12);
    CHECK(std::abs(delta_n(0, A) - 1.0) < 1e-12);
    CHECK(std::abs(delta_n(1, A) - loop_value_at(A)) < 1e-12);
  }
  for (int r : {3, 4, 5, 8}) {
    Complex A = root_of_unity_A(r);
    CHECK(std::abs(quantum_int(r - 1, A)) > 1e-3);
    CHECK(std::abs(quantum_int(r, A)) < 1e-12);
    for (int n = 0; n <= 10; ++n) {
      double sine = (n % 2 ? -1 : 1) * std::sin((n + 1) * M_PI / r) / std::sin(M_PI / r);
      CHECK(std::abs(delta_n(n, A) - sine) < 1e-12);
      CHECK(std::abs(delta_n(n, A) - loop_chebyshev(n, A)) < 1e-10);
      if (n >= 1)
        CHECK(std::abs(delta_n(n + 1, A) -
                       (loop_value_at(A) * delta_n(n, A) - delta_n(n - 1, A))) < 1e-10);
    }
    for (int n = 1; n <= r - 1; ++n) CHECK(quantum_int(n, A).real() > 0);
  }
  CHECK_THROWS_AS(quantum_int(3, Complex(1, 0)), InvalidArgument);
  CHECK_THROWS_AS(delta_n(2, Complex(0, 1)), InvalidArgument);
}

TEST_CASE("admissibility") {
  for (int r = 3; r <= 6; ++r)
    for (int a = 0; a <= 2 * r; ++a)
      for (int b = 0; b <= 2 * r; ++b)
        for (int c = 0; c <= 2 * r; ++c) {
          bool want = (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b &&
                      a + b + c <= 2 * r - 4;
          CHECK(admissible(a, b, c, r) == want);
        }
  CHECK_FALSE(admissible(-1, 1, 0));
}

TEST_CASE("theta net") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ang(0.1, 0.7);
  for (int t = 0; t < 10; ++t) {
    Complex A = std::polar(1.0, ang(rng));
    CHECK(std::abs(theta_net(0, 0, 0, A) - 1.0) < 1e-12);
    CHECK(std::abs(theta_net(1, 1, 0, A) - loop_value_at(A)) < 1e-12);
    for (int b = 0; b <= 6; ++b) CHECK(std::abs(theta_net(0, b, b, A) - delta_n(b, A)) < 1e-10);
    // symmetric in its labels
    CHECK(std::abs(theta_net(2, 3, 1, A) - theta_net(3, 1, 2, A)) < 1e-10);
  }
  // The closed form at the Fibonacci point agrees with the net of 2-projectors
  // with no extra normalisation: ratio 1.
  Complex th = theta_net(2, 2, 2, fibonacci_A());
  CHECK(std::abs(th - (kPhi - 1)) < 1e-12);
  CHECK(std::abs(th - two_strand_nets(kPhi).Theta) < 1e-12);
  CHECK_THROWS_AS(theta_net(1, 1, 1, fibonacci_A()), InvalidArgument);
  CHECK_THROWS_AS(theta_net_at_level(2, 2, 2, 4), InvalidArgument);
  CHECK_NOTHROW(theta_net_at_level(2, 2, 2, 5));
}

TEST_CASE("two-strand nets") {
  auto n = two_strand_nets(kPhi);
  CHECK(std::abs(n.Delta - kPhi) < 1e-14);
  CHECK(std::abs(n.Theta - (kPhi - 1)) < 1e-14);
  CHECK(std::abs(n.T - (3 * kPhi - 5)) < 1e-14);
  CHECK(std::abs(n.T + n.Theta * n.Theta / (n.Delta * n.Delta)) < 1e-14);
  // the other closed form of Theta
  const double e = kPhi - 1 / kPhi;
  CHECK(std::abs(n.Theta - (e * e * kPhi - n.Delta / kPhi)) < 1e-14);
  CHECK(two_strand_nets(2).Delta == 3);
  CHECK_THROWS_AS(two_strand_nets(0), InvalidArgument);
}

TEST_CASE("Fibonacci recoupling matrix") {
  auto f = fib_recoupling_F(kPhi);
  CHECK(mat_dist(f.raw * f.raw, mat_identity(2)) < 1e-14);
  CHECK(mat_dist(f.symmetric * f.symmetric, mat_identity(2)) < 1e-14);
  const double D = kPhi;
  ComplexMatrix want = mat_from_rows(2, 2, {1 / D, 1 / std::sqrt(D), 1 / std::sqrt(D), -1 / D});
  CHECK(mat_dist(f.symmetric, want) < 1e-14);
  CHECK(mat_dist(f.symmetric, fibonacci_local().first) < 1e-14);
  CHECK(is_unitary(f.symmetric, 1e-14));
  CHECK(f.symmetric.imag().isZero());
  CHECK_THROWS_AS(fib_recoupling_F(2), InvalidArgument);
}

TEST_CASE("vertex factors and bubbles") {
  CHECK(std::abs(vertex_factor_at_level(0, 0, 0, 5) - 1.0) < 1e-14);
  for (int r = 3; r <= 7; ++r) {
    Complex A = root_of_unity_A(r);
    for (int a = 0; a <= r - 2; ++a)
      for (int b = 0; b <= r - 2; ++b)
        for (int c = 0; c <= r - 2; ++c) {
          if (!admissible(a, b, c, r)) continue;
          double f = vertex_factor_at_level(a, b, c, r);
          CHECK(f > 0);
          CHECK(std::isfinite(f));
          // f^4 Theta-hat^2 = [a+1][b+1][c+1]
          double th = std::abs(theta_net(a, b, c, A));
          double q = (quantum_int(a + 1, A) * quantum_int(b + 1, A) * quantum_int(c + 1, A)).real();
          CHECK(std::abs(std::pow(f, 4) * th * th - q) < 1e-9 * std::max(1.0, q));
          double bub = modified_bubble(a, b, c, A);
          Complex sq = delta_n(b, A) * delta_n(c, A) / delta_n(a, A);
          CHECK(std::abs(bub * bub - sq) < 1e-10);
        }
  }
  CHECK_THROWS_AS(vertex_factor_at_level(2, 2, 2, 4), InvalidArgument);
}

TEST_CASE("recoupling element scaffold, two-strand case") {
  const Complex A = fibonacci_A();
  const double tau = 1 / kPhi;
  auto n = two_strand_nets(kPhi);
  // internal label 0: the tetrahedron degenerates to Delta, vertex factors 1
  double f0 = vertex_factor(2, 2, 0, A);
  CHECK(std::abs(f0 - 1.0) < 1e-12);
  Complex m00 = recoupling_element(2, 2, 2, 2, modified_tet(n.Delta, f0, f0, 1, 1), A);
  CHECK(std::abs(m00 - tau) < 1e-12);
  // all labels 2: ModTet = alpha^4 T
  double f2 = vertex_factor(2, 2, 2, A);
  CHECK(std::abs(f2 * f2 - fib_recoupling_F(kPhi).alpha2) < 1e-12);
  Complex m22 = recoupling_element(2, 2, 2, 2, modified_tet(n.T, f2, f2, f2, f2), A);
  CHECK(std::abs(m22 + tau) < 1e-12);
  CHECK_THROWS_AS(recoupling_element(1, 2, 2, 2, 1.0, A), InvalidArgument);
}

}  // TEST_SUITE
