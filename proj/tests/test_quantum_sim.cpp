#include <doctest.h>

#include <functional>
#include <random>

#include "knotq/bracket.hpp"
#include "knotq/qnumbers.hpp"
#include "knotq/quantum_sim.hpp"
#include "oracles.hpp"

using namespace knotq;

namespace {

ComplexVector basis_vec(int n, int k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1;
  return v;
}

}  // namespace

TEST_SUITE("quantum_sim") {

TEST_CASE("splitmix streams") {
  SplitMix64 a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  std::uint64_t x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
  // reference value of the plain generator from state 0
  SplitMix64 z(std::uint64_t{0});
  CHECK(z.next() == 0xE220A8397B1DCDAFull);
  SplitMix64 u(7, 3);
  for (int t = 0; t < 1000; ++t) {
    double r = u.uniform();
    CHECK((r >= 0 && r < 1));
  }
}

TEST_CASE("Hadamard test basics") {
  TrialBudget b{20000, 5, 1};
  ComplexVector e0 = basis_vec(2, 0);
  CHECK(hadamard_test(mat_identity(2), e0, HadamardPart::Re, b).p0 == 1.0);
  CHECK(hadamard_test(-mat_identity(2), e0, HadamardPart::Re, b).p0 == 0.0);
  CHECK(hadamard_test(mat_identity(2), e0, HadamardPart::Im, b).exact_p0 == doctest::Approx(0.5));
  ComplexMatrix S = mat_from_rows(2, 2, {Complex(0, 1), 0, 0, 1});
  CHECK(hadamard_test(S, e0, HadamardPart::Im, b).exact_p0 == doctest::Approx(1.0));
  CHECK_THROWS_AS(hadamard_test(2.0 * mat_identity(2), e0, HadamardPart::Re, b), InvalidArgument);
  CHECK_THROWS_AS(hadamard_test(mat_identity(2), 2.0 * e0, HadamardPart::Re, b), InvalidArgument);
  CHECK_THROWS_AS(hadamard_test(mat_identity(2), e0, HadamardPart::Re, TrialBudget{0, 1, 1}),
                  InvalidArgument);
}

TEST_CASE("Hadamard test on a braid image") {
  RepMatrixSet rep = tl_two_by_two(M_PI / 10);
  ComplexMatrix U = rep_image(rep, BraidWord(3, {1, -2, 1}));
  ComplexVector e0 = basis_vec(2, 0);
  const double exact = 0.5 + 0.5 * U(0, 0).real();
  HadamardEstimate h = hadamard_test(U, e0, HadamardPart::Re, {200000, 9, 1});
  CHECK(h.exact_p0 == doctest::Approx(exact).epsilon(1e-14));
  CHECK(std::abs(h.p0 - exact) < 3 * h.stderr_p0 + 1e-12);
  HadamardEstimate hi = hadamard_test(U, e0, HadamardPart::Im, {200000, 10, 1});
  CHECK(hi.exact_value() == doctest::Approx(U(0, 0).imag()));
  CHECK(std::abs(hi.p0 - hi.exact_p0) < 4 * hi.stderr_p0);
}

TEST_CASE("thread count does not change the estimate") {
  RepMatrixSet rep = tl_two_by_two(0.4 * M_PI);
  ComplexMatrix U = rep_image(rep, BraidWord(3, {1, 2, 1, 1}));
  ComplexVector psi = ComplexVector::Ones(2) / std::sqrt(2.0);
  double one = hadamard_test(U, psi, HadamardPart::Re, {300001, 77, 1}).p0;
  double three = hadamard_test(U, psi, HadamardPart::Re, {300001, 77, 3}).p0;
  CHECK(one == three);
}

TEST_CASE("estimator is unbiased and scales as 1/sqrt(N)") {
  RepMatrixSet rep = tl_two_by_two(M_PI / 10);
  ComplexMatrix U = rep_image(rep, BraidWord(3, {1, -2, 1}));
  ComplexVector e0 = basis_vec(2, 0);
  auto spread = [&](long long trials, int reps, double& mean) {
    double s = 0, s2 = 0;
    for (int k = 0; k < reps; ++k) {
      double p = hadamard_test(U, e0, HadamardPart::Re, {trials, 1000u + k, 1}).p0;
      s += p;
      s2 += p * p;
    }
    mean = s / reps;
    return std::sqrt((s2 - s * s / reps) / (reps - 1));
  };
  double m1, m4;
  double sd1 = spread(2000, 200, m1);
  double sd4 = spread(8000, 200, m4);
  const double exact = 0.5 + 0.5 * U(0, 0).real();
  CHECK(std::abs(m1 - exact) < 4 * sd1 / std::sqrt(200.0));
  CHECK(std::abs(m4 - exact) < 4 * sd4 / std::sqrt(200.0));
  CHECK(sd1 / sd4 == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("trace estimates") {
  TrialBudget b{50000, 3, 1};
  TraceEstimate id = trace_estimate(mat_identity(2), b);
  CHECK(std::abs(id.value - Complex(2, 0)) < 4 * (id.stderr_re + id.stderr_im) + 0.02);
  ComplexMatrix z = gate::pauli_z();
  TraceEstimate tz = trace_estimate(z, b);
  CHECK(std::abs(tz.value) < 0.05);
  RepMatrixSet rep = tl_two_by_two(0.9 * M_PI);
  ComplexMatrix U = rep_image(rep, BraidWord(3, {1, 1, -2}));
  TraceEstimate tu = trace_estimate(U, b);
  CHECK(std::abs(tu.exact - U.trace()) < 1e-14);
  CHECK(std::abs(tu.value.real() - tu.exact.real()) < 3 * tu.stderr_re + 1e-9);
  CHECK(std::abs(tu.value.imag() - tu.exact.imag()) < 3 * tu.stderr_im + 1e-9);
}

TEST_CASE("three-strand trace formula") {
  const double th = M_PI / 10;
  const Complex A = std::polar(1.0, th);
  // empty word: three unlinked circles
  CHECK(std::abs(jones_3braid_exact(BraidWord(3, {}), th) - std::pow(loop_value_at(A), 2)) < 1e-12);
  // s1^3 closes to a trefoil plus a separate circle
  BraidWord t(3, {1, 1, 1});
  Complex oracle_value = lp_eval(oracle::bracket(trace_closure(t)), A);
  CHECK(std::abs(jones_3braid_exact(t, th) - oracle_value) < 1e-10);
  Jones3Estimate est = jones_3braid(t, th, {100000, 2, 1});
  CHECK(std::abs(est.exact - oracle_value) < 1e-10);
  CHECK(std::abs(est.estimate - est.exact) < 4 * est.stderr);
  BraidWord w(3, {1, -2, 1});
  CHECK(std::abs(jones_3braid_exact(w, th) - lp_eval(bracket_state_sum(trace_closure(w)), A)) < 1e-10);
  CHECK_THROWS_AS(jones_3braid_exact(w, M_PI / 5), InvalidArgument);
  CHECK_THROWS_AS(jones_3braid_exact(BraidWord(4, {1}), th), InvalidArgument);
}

TEST_CASE("exact trace path matches state sum on all short words") {
  const int gens[4] = {1, -1, 2, -2};
  for (double th : {M_PI / 10, 0.45 * M_PI, 0.55 * M_PI, 0.95 * M_PI}) {
    REQUIRE(tl_two_by_two_admissible(th));
    RepMatrixSet rep = tl_two_by_two(th);
    const Complex A = std::polar(1.0, th);
    std::vector<int> w;
    std::function<void(int)> rec = [&](int left) {
      BraidWord b(3, w);
      Complex via = rep_image(rep, b).trace() +
                    std::pow(A, exponent_sum(b)) * (std::pow(loop_value_at(A), 2) - 2.0);
      CHECK(std::abs(via - lp_eval(bracket_state_sum(trace_closure(b)), A)) < 1e-10);
      if (left == 0) return;
      for (int g : gens) {
        w.push_back(g);
        rec(left - 1);
        w.pop_back();
      }
    };
    rec(th == M_PI / 10 ? 6 : 3);
  }
}

TEST_CASE("Fibonacci process space") {
  CHECK(fib_process_basis(2) == std::vector<std::string>{"P"});
  CHECK(fib_process_basis(4).size() == 2);  // P*P, PPP
  CHECK(fib_process_basis(4)[0] == "P*P");
  for (int n = 2; n <= 12; n += 2) {
    CHECK(fib_process_basis(n).size() == static_cast<std::size_t>(oracle::fib(n - 2)));
    CHECK(check_rep(fib_process_rep(n)).ok(1e-12));
  }
  // s1 acts by conj(R): the TL value at the positive crossing
  auto [F, R] = fibonacci_local();
  RepMatrixSet r4 = fib_process_rep(4);
  CHECK(std::abs(r4.gens[0](0, 0) - std::conj(R(0, 0))) < 1e-15);
  CHECK(mat_dist(r4.gens[1], F * R.conjugate() * F) < 1e-15);
  CHECK_THROWS_AS(fib_process_basis(3), InvalidArgument);
}

TEST_CASE("colored plat closures") {
  const Complex A = fibonacci_A();
  for (int a = 0; a <= 3; ++a) {
    const Complex B = root_of_unity_A(5);
    CHECK(std::abs(colored_plat(BraidWord(2, {}), a, B) - delta_n(a, B)) < 1e-12);
    CHECK(std::abs(colored_plat(BraidWord(4, {}), a, B) - std::pow(delta_n(a, B), 2)) < 1e-12);
  }
  std::vector<BraidWord> fixtures{BraidWord(4, {2, 2, 2}), BraidWord(4, {2, -1, 2}),
                                  BraidWord(2, {1, 1, 1}), BraidWord(4, {1, 2, -3, 2, 1}),
                                  BraidWord(6, {2, 4, -3, 2})};
  for (const auto& b : fixtures) {
    CAPTURE(to_string(b));
    const Complex pd = colored_bracket_unbounded(plat_closure(b), 2, A);
    CHECK(std::abs(colored_plat(b, 2, A, PlatRoute::Fibonacci) - pd) < 1e-8);
    CHECK(std::abs(colored_plat(b, 2, A, PlatRoute::CupStates) - pd) < 1e-8);
  }
  for (int r = 3; r <= 5; ++r)
    for (int a = 1; a <= r - 2; ++a) {
      const Complex B = root_of_unity_A(r);
      BraidWord t(4, {2, 2, 2});
      CHECK(std::abs(colored_plat(t, a, B) - colored_bracket(plat_closure(t), a, B)) < 1e-8);
    }
  // colour 1 is delta times the plain bracket
  BraidWord h(4, {2, -1, 2, 2});
  const Complex B = root_of_unity_A(7);
  CHECK(std::abs(colored_plat(h, 1, B) -
                 loop_value_at(B) * lp_eval(bracket_state_sum(plat_closure(h)), B)) < 1e-10);
  CHECK_THROWS_AS(colored_plat(BraidWord(3, {1}), 2, A), InvalidArgument);
  CHECK_THROWS_AS(colored_plat(BraidWord(4, {1}), 3, A, PlatRoute::Fibonacci), InvalidArgument);
  CHECK_THROWS_AS(colored_plat(BraidWord(6, {1}), 3, root_of_unity_A(5)), BoundExceeded);
}

TEST_CASE("WRT sums") {
  for (int r = 3; r <= 5; ++r) {
    const Complex A = root_of_unity_A(r);
    Complex want = 0;
    for (int a = 0; a <= r - 2; ++a) want += delta_n(a, A) * delta_n(a, A);
    CHECK(std::abs(wrt_invariant(BraidWord(2, {}), r) - want) < 1e-12);
    CHECK(std::abs(wrt_invariant(parse_pd("O"), r) - want) < 1e-12);
  }
  BraidWord trefoil(4, {2, 2, 2});
  const Complex A3 = root_of_unity_A(3);
  Complex w3 = wrt_invariant(trefoil, 3);
  CHECK(std::abs(w3 - (1.0 + delta_n(1, A3) * colored_plat(trefoil, 1, A3))) < 1e-12);
  for (int r = 3; r <= 5; ++r)
    CHECK(std::abs(wrt_invariant(trefoil, r) - wrt_invariant(plat_closure(trefoil), r)) < 1e-6);
  CHECK_THROWS_AS(wrt_invariant(trefoil, 6), InvalidArgument);
}

}  // TEST_SUITE
