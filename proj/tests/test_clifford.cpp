#include <doctest.h>

#include <random>

#include "knotq/clifford.hpp"

using namespace knotq;

namespace {

// Jordan-Wigner matrices for c_1..c_n, an independent model of the algebra.
std::vector<ComplexMatrix> jw_majoranas(int n) {
  const int q = (n + 1) / 2;
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < n; ++k) {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (int s = 0; s < q; ++s) {
      ComplexMatrix f = mat_identity(2);
      if (s < k / 2) f = gate::pauli_z();
      if (s == k / 2) f = (k % 2 == 0) ? gate::pauli_x() : gate::pauli_y();
      m = mat_tensor(m, f);
    }
    out.push_back(m);
  }
  return out;
}

template <class S>
ComplexMatrix as_matrix(const CliffordElement<S>& x, const std::vector<ComplexMatrix>& c) {
  const auto dim = c[0].rows();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& [m, s] : x.terms()) {
    ComplexMatrix p = ComplexMatrix::Identity(dim, dim);
    for (int k = 0; k < x.n(); ++k)
      if (m >> k & 1) p = p * c[k];
    out += to_complex(s) * p;
  }
  return out;
}

CliffordExact random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<CliffordMonomial> mono(0, (CliffordMonomial{1} << n) - 1);
  CliffordExact x(n);
  for (int t = 0; t < 4; ++t)
    x.add(mono(rng), ExactScalar(Rational(small(rng), 2), small(rng), small(rng), 0));
  return x;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("exact scalar field") {
  ExactScalar r = ExactScalar::sqrt2();
  CHECK(r * r == ExactScalar(2));
  CHECK(ExactScalar::inv_sqrt2() * r == ExactScalar(1));
  CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
  CHECK(std::abs(ExactScalar(1, 2, 3, 4).to_complex() -
                 Complex(1 + 3 * std::sqrt(2.0), 2 + 4 * std::sqrt(2.0))) < 1e-14);
}

TEST_CASE("generator relations") {
  const int n = 4;
  auto c = [](int k) { return CliffordExact::generator(4, k); };
  const CliffordExact one = CliffordExact::scalar(n, 1);
  for (int i = 1; i <= n; ++i) {
    CHECK(c(i) * c(i) == one);
    for (int j = i + 1; j <= n; ++j) CHECK(c(i) * c(j) == -(c(j) * c(i)));
  }
  CHECK_THROWS_AS(c(1) * CliffordExact::generator(3, 1), InvalidArgument);
  CHECK_THROWS_AS(CliffordExact::generator(4, 5), InvalidArgument);
}

TEST_CASE("monomial sign against the matrix model") {
  const int n = 6;
  auto mats = jw_majoranas(n);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<CliffordMonomial> mono(0, 63);
  for (int t = 0; t < 200; ++t) {
    CliffordMonomial a = mono(rng), b = mono(rng);
    CliffordNumeric x(n), y(n);
    x.add(a, 1.0);
    y.add(b, 1.0);
    CHECK(mat_dist(as_matrix(x * y, mats), as_matrix(x, mats) * as_matrix(y, mats)) < 1e-12);
  }
}

TEST_CASE("associativity and squares of monomials") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    CliffordExact x = random_element(rng, 5), y = random_element(rng, 5),
                  z = random_element(rng, 5);
    CHECK((x * y) * z == x * (y * z));
  }
  for (CliffordMonomial m = 0; m < 32; ++m) {
    CliffordExact x(5);
    x.add(m, 1);
    CliffordExact sq = x * x;
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first == 0);
    CHECK((sq.coeff(0) == ExactScalar(1) || sq.coeff(0) == ExactScalar(-1)));
  }
}

TEST_CASE("quaternions from three generators") {
  auto q = clifford_quaternions(3, 1, 2, 3);
  const CliffordExact m1 = CliffordExact::scalar(3, -1);
  CHECK(q.I * q.I == m1);
  CHECK(q.J * q.J == m1);
  CHECK(q.K * q.K == m1);
  CHECK(q.I * q.J * q.K == m1);
  // A = yx, B = zy, C = xz: AB = C with these signs
  CHECK(q.I * q.J == q.K);
  for (auto [a, b, c] : {std::array{2, 5, 4}, std::array{6, 1, 3}}) {
    auto t = clifford_quaternions(6, a, b, c);
    const CliffordExact m = CliffordExact::scalar(6, -1);
    CHECK(t.I * t.I == m);
    CHECK(t.I * t.J * t.K == m);
  }
  CHECK_THROWS_AS(clifford_quaternions(3, 1, 1, 2), InvalidArgument);
}

TEST_CASE("braiding operators") {
  CliffordExact t = braid_tau(2, 1);
  CHECK(t.coeff(0) == ExactScalar::inv_sqrt2());
  CHECK(t.coeff(0b11) == -ExactScalar::inv_sqrt2());  // c2 c1 = -c1 c2
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(braid_tau(n, k) * braid_tau_inverse(n, k) == CliffordExact::scalar(n, 1));
  CliffordExact s1 = braid_tau(3, 1), s2 = braid_tau(3, 2);
  CliffordExact lhs = s1 * s2 * s1, rhs = s2 * s1 * s2;
  CHECK(lhs == rhs);
  auto q = clifford_quaternions(3, 1, 2, 3);
  CHECK(lhs == ExactScalar::inv_sqrt2() * (q.I + q.J));
  CHECK_THROWS_AS(braid_tau(3, 3), InvalidArgument);
  CHECK_THROWS_AS(braid_tau(3, 0), InvalidArgument);
}

TEST_CASE("conjugation matrices") {
  ComplexMatrix t = conjugation_matrix(2, 1);
  CHECK(mat_dist(t, mat_from_rows(2, 2, {0, -1, 1, 0})) == 0.0);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      ComplexMatrix m = conjugation_matrix(n, k);
      CHECK(mat_dist(m, conjugation_matrix_by_algebra(n, k)) < 1e-14);
      ComplexMatrix m2 = m * m;
      CHECK(mat_dist(m2 * m2, mat_identity(n)) == 0.0);
      for (int j = 1; j <= n; ++j)
        if (j != k && j != k + 1) CHECK(m(j - 1, j - 1) == Complex(1));
      CHECK(m.imag().isZero());
      CHECK(is_unitary(m, 0.0));
    }
}

TEST_CASE("fermion pairing") {
  auto [psi, psid] = fermion_pair(2, 1, 2);
  CHECK((psi * psi).is_zero());
  CHECK((psid * psid).is_zero());
  CHECK(psi * psid + psid * psi == CliffordExact::scalar(2, 1));
  CHECK(psi + psid == CliffordExact::generator(2, 1));
  auto [p2, p2d] = fermion_pair(5, 4, 2);
  CHECK(p2 * p2d + p2d * p2 == CliffordExact::scalar(5, 1));
  CHECK_THROWS_AS(fermion_pair(2, 1, 1), InvalidArgument);
}

}  // TEST_SUITE
