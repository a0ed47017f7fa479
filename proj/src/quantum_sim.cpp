#include "knotq/quantum_sim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "knotq/bracket.hpp"
#include "knotq/qnumbers.hpp"
#include "knotq/tl_algebra.hpp"

namespace knotq {

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream)
    : state_(mix(seed + kGamma) + stream * 0xD1B54A32D192ED03ull) {}

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

namespace {

void check_budget(const TrialBudget& b) {
  if (b.trials < 1) throw InvalidArgument("trial budget must be at least 1");
  if (b.threads < 1) throw InvalidArgument("thread count must be at least 1");
}

// Number of outcome-0 results in `trials` Bernoulli(p0) draws.
long long sample_zeros(double p0, const TrialBudget& budget) {
  const long long chunks = (budget.trials + kTrialChunk - 1) / kTrialChunk;
  std::vector<long long> counts(chunks, 0);
  auto work = [&](long long first, long long step) {
    for (long long c = first; c < chunks; c += step) {
      SplitMix64 rng(budget.seed, static_cast<std::uint64_t>(c));
      const long long n = std::min(kTrialChunk, budget.trials - c * kTrialChunk);
      long long zeros = 0;
      for (long long t = 0; t < n; ++t) zeros += rng.uniform() < p0;
      counts[c] = zeros;
    }
  };
  const long long workers = std::min<long long>(budget.threads, chunks);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (long long w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  long long total = 0;
  for (long long c : counts) total += c;
  return total;
}

}  // namespace

HadamardEstimate hadamard_test(const ComplexMatrix& U, const ComplexVector& psi,
                               HadamardPart part, const TrialBudget& budget) {
  check_budget(budget);
  if (U.rows() != U.cols() || U.rows() != psi.size())
    throw InvalidArgument("hadamard_test: U and psi dimensions differ");
  if (!is_unitary(U, 1e-10)) throw InvalidArgument("hadamard_test: U is not unitary");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InvalidArgument("hadamard_test: psi is not normalized");

  // Final state (|0>(psi + c U psi) + |1>(psi - c U psi))/2, c = 1 or -i.
  const Complex c = part == HadamardPart::Re ? Complex(1) : Complex(0, -1);
  const ComplexVector upsi = U * psi;
  const ComplexVector branch0 = (psi + c * upsi) / 2.0;
  const double p0 = std::clamp(branch0.squaredNorm(), 0.0, 1.0);

  HadamardEstimate out;
  out.exact_p0 = p0;
  out.p0 = static_cast<double>(sample_zeros(p0, budget)) / static_cast<double>(budget.trials);
  out.stderr_p0 = std::sqrt(out.p0 * (1 - out.p0) / static_cast<double>(budget.trials));
  return out;
}

TraceEstimate trace_estimate(const ComplexMatrix& U, const TrialBudget& budget) {
  if (U.rows() != U.cols()) throw InvalidArgument("trace_estimate: U is not square");
  TraceEstimate out;
  double var_re = 0, var_im = 0;
  for (Eigen::Index k = 0; k < U.rows(); ++k) {
    ComplexVector e = ComplexVector::Zero(U.rows());
    e(k) = 1;
    for (HadamardPart part : {HadamardPart::Re, HadamardPart::Im}) {
      TrialBudget b = budget;
      b.seed = SplitMix64::mix(budget.seed ^ (2 * static_cast<std::uint64_t>(k) +
                                              (part == HadamardPart::Im)));
      HadamardEstimate h = hadamard_test(U, e, part, b);
      const double se2 = 4 * h.stderr_p0 * h.stderr_p0;
      if (part == HadamardPart::Re) {
        out.value += h.value();
        var_re += se2;
      } else {
        out.value += Complex(0, h.value());
        var_im += se2;
      }
    }
  }
  out.exact = U.trace();
  out.stderr_re = std::sqrt(var_re);
  out.stderr_im = std::sqrt(var_im);
  return out;
}

namespace {

Complex trace_correction(const BraidWord& b, double theta) {
  const Complex A = std::polar(1.0, theta);
  const Complex d = loop_value_at(A);
  return std::pow(A, exponent_sum(b)) * (d * d - 2.0);
}

void check_three(const BraidWord& b) {
  if (b.strands != 3) throw InvalidArgument("jones_3braid needs a 3-strand braid");
}

}  // namespace

Complex jones_3braid_exact(const BraidWord& b, double theta) {
  check_three(b);
  RepMatrixSet rep = tl_two_by_two(theta);
  return rep_image(rep, b).trace() + trace_correction(b, theta);
}

Jones3Estimate jones_3braid(const BraidWord& b, double theta, const TrialBudget& budget) {
  check_three(b);
  RepMatrixSet rep = tl_two_by_two(theta);
  TraceEstimate t = trace_estimate(rep_image(rep, b), budget);
  const Complex corr = trace_correction(b, theta);
  return {t.value + corr, t.exact + corr, std::hypot(t.stderr_re, t.stderr_im)};
}

// ---------------------------------------------------------------------------
// Fibonacci process space

std::vector<std::string> fib_process_basis(int n) {
  if (n < 2 || n % 2) throw InvalidArgument("process space needs an even number of strands >= 2");
  // y_1 = P, y_{n-1} = P, a '*' is always followed by 'P'
  std::vector<std::string> all{"P"};
  for (int k = 2; k <= n - 1; ++k) {
    std::vector<std::string> next;
    for (const auto& s : all) {
      if (s.back() == 'P') next.push_back(s + '*');
      next.push_back(s + 'P');
    }
    all = std::move(next);
  }
  std::erase_if(all, [](const std::string& s) { return s.back() != 'P'; });
  std::string vac;
  for (int k = 1; k <= n - 1; ++k) vac += (k % 2) ? 'P' : '*';
  std::stable_partition(all.begin(), all.end(), [&](const std::string& s) { return s == vac; });
  return all;
}

RepMatrixSet fib_process_rep(int n) {
  const auto basis = fib_process_basis(n);
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
  auto [F, R] = fibonacci_local();
  const ComplexMatrix Rb = R.conjugate();
  const ComplexMatrix two = F * Rb * F;
  const auto dim = static_cast<Eigen::Index>(basis.size());

  RepMatrixSet rep{n, {}, {}, "fibonacci_process"};
  for (int k = 1; k <= n - 1; ++k) {
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      // y_0 = y_n = '*'
      const std::string y = "*" + basis[col] + "*";
      const char left = y[k - 1], right = y[k + 1];
      auto ch = [](char c) { return c == '*' ? 0 : 1; };
      if (left == '*' || right == '*') {
        const char channel = left == '*' ? right : left;
        g(col, col) = Rb(ch(channel), ch(channel));
      } else {
        for (char mid : {'*', 'P'}) {
          std::string s = basis[col];
          s[k - 1] = mid;
          auto it = index.find(s);
          if (it == index.end()) continue;
          g(it->second, col) = two(ch(mid), ch(basis[col][k - 1]));
        }
      }
    }
    rep.gens.push_back(g);
    rep.inverse_gens.push_back(g.adjoint());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Planar cup states

namespace {

using CupState = std::string;  // s[p] = partner of point p
using CupVector = std::unordered_map<CupState, Complex>;

void accumulate(CupVector& v, const CupState& s, Complex c) {
  auto [it, fresh] = v.try_emplace(s, c);
  if (!fresh) it->second += c;
}

CupVector apply_u(const CupVector& v, int j, Complex delta) {
  CupVector out;
  for (const auto& [s, c] : v) {
    const int x = static_cast<unsigned char>(s[j]), y = static_cast<unsigned char>(s[j + 1]);
    if (x == j + 1) {
      accumulate(out, s, delta * c);
      continue;
    }
    CupState t = s;
    t[x] = static_cast<char>(y);
    t[y] = static_cast<char>(x);
    t[j] = static_cast<char>(j + 1);
    t[j + 1] = static_cast<char>(j);
    accumulate(out, t, c);
  }
  return out;
}

CupVector apply_crossing(const CupVector& v, int j, bool positive, Complex A, Complex delta) {
  const Complex vert = positive ? A : 1.0 / A, cup = positive ? 1.0 / A : A;
  CupVector out = apply_u(v, j, delta);
  for (auto& [s, c] : out) c *= cup;
  for (const auto& [s, c] : v) accumulate(out, s, vert * c);
  return out;
}

// TL diagram d placed on points offset .. offset+m-1, on top of the state.
std::pair<CupState, int> apply_diagram(const CupState& s, const TLDiagram& d, int offset) {
  const int m = d.n;
  auto in_window = [&](int p) { return p >= offset && p < offset + m; };
  CupState t = s;
  std::vector<char> used(m, 0);  // bottom points of d that were walked
  for (int j = 0; j < m; ++j) {
    // walk from top point j of d
    int q = d.pair[j];
    int end;
    while (true) {
      if (q < m) {  // another top point
        end = offset + q;
        break;
      }
      used[q - m] = 1;
      const int sp = static_cast<unsigned char>(s[offset + q - m]);
      if (!in_window(sp)) {
        end = sp;
        break;
      }
      used[sp - offset] = 1;
      q = d.pair[sp - offset + m];
    }
    t[offset + j] = static_cast<char>(end);
    if (!in_window(end)) t[end] = static_cast<char>(offset + j);
  }
  // arcs of the state joined through caps of d, both ends outside
  for (int b = 0; b < m; ++b) {
    const int x = static_cast<unsigned char>(s[offset + b]);
    if (used[b] || in_window(x)) continue;
    int p = b, y;
    while (true) {
      used[p] = 1;
      const int q = d.pair[p + m] - m;
      used[q] = 1;
      const int sp = static_cast<unsigned char>(s[offset + q]);
      if (!in_window(sp)) {
        y = sp;
        break;
      }
      p = sp - offset;
    }
    t[x] = static_cast<char>(y);
    t[y] = static_cast<char>(x);
  }
  // closed loops: what is left
  int loops = 0;
  for (int b = 0; b < m; ++b) {
    if (used[b]) continue;
    ++loops;
    int p = b;
    while (!used[p]) {
      used[p] = 1;
      const int across = static_cast<unsigned char>(s[offset + p]) - offset;
      used[across] = 1;
      p = d.pair[across + m] - m;
    }
  }
  return {t, loops};
}

int closing_loops(const CupState& s, const CupState& caps) {
  std::vector<char> seen(s.size(), 0);
  int loops = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (seen[p]) continue;
    ++loops;
    std::size_t q = p;
    while (!seen[q]) {
      seen[q] = 1;
      const auto r = static_cast<std::size_t>(static_cast<unsigned char>(s[q]));
      seen[r] = 1;
      q = static_cast<unsigned char>(caps[r]);
    }
  }
  return loops;
}

Complex plat_by_cups(const BraidWord& b, int a, Complex A) {
  const int n = b.strands, N = n * a;
  if (N > kMaxPlatPoints)
    throw BoundExceeded("colored_plat: " + std::to_string(n) + " strands at colour " +
                        std::to_string(a) + " exceeds " + std::to_string(kMaxPlatPoints) +
                        " cabled points");
  const Complex delta = loop_value_at(A);
  CupState nested(N, 0);
  for (int m = 0; m < n; m += 2)
    for (int j = 0; j < a; ++j) {
      const int x = m * a + a - 1 - j, y = (m + 1) * a + j;
      nested[x] = static_cast<char>(y);
      nested[y] = static_cast<char>(x);
    }
  CupVector v{{nested, Complex(1)}};

  const TLNumeric p = jones_wenzl(a, A);
  for (int bundle = 0; bundle < n; ++bundle) {
    CupVector next;
    for (const auto& [s, c] : v)
      for (const auto& [d, w] : p.terms()) {
        auto [t, loops] = apply_diagram(s, d, bundle * a);
        accumulate(next, t, c * w * std::pow(delta, loops));
      }
    v = std::move(next);
  }

  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const int k = std::abs(*it), left = (k - 1) * a;
    for (int t = a - 1; t >= 0; --t)
      for (int step = 0; step < a; ++step)
        v = apply_crossing(v, left + t + step, *it > 0, A, delta);
  }

  Complex total = 0;
  for (const auto& [s, c] : v) total += c * std::pow(delta, closing_loops(s, nested));
  return total;
}

bool is_fibonacci_point(Complex A) { return std::abs(A - fibonacci_A()) < 1e-12; }

}  // namespace

Complex colored_plat(const BraidWord& b, int a, Complex A, PlatRoute route) {
  if (b.strands % 2) throw InvalidArgument("colored_plat needs an even strand count");
  if (a < 0) throw InvalidArgument("colored_plat: negative colour");
  if (a == 0) return 1;
  const bool fib_ok = a == 2 && is_fibonacci_point(A);
  if (route == PlatRoute::Fibonacci && !fib_ok)
    throw InvalidArgument("Fibonacci route needs colour 2 at A = e^{3 pi i/5}");
  if (route == PlatRoute::Fibonacci || (route == PlatRoute::Auto && fib_ok)) {
    const RepMatrixSet rep = fib_process_rep(b.strands);
    const Complex vac = rep_image(rep, b)(0, 0);
    return vac * std::pow(delta_n(2, A), b.strands / 2);
  }
  return plat_by_cups(b, a, A);
}

Complex colored_plat_at_level(const BraidWord& b, int a, int r) {
  if (a > r - 2) throw InvalidArgument("colour " + std::to_string(a) + " above r - 2 at r = " + std::to_string(r));
  return colored_plat(b, a, root_of_unity_A(r));
}

namespace {

void check_level(int r) {
  if (r < 3 || r > 5) throw InvalidArgument("wrt_invariant supports r = 3, 4, 5");
}

}  // namespace

Complex wrt_invariant(const BraidWord& plat, int r) {
  check_level(r);
  const Complex A = root_of_unity_A(r);
  Complex sum = 0;
  for (int a = 0; a <= r - 2; ++a) sum += delta_n(a, A) * colored_plat(plat, a, A);
  return sum;
}

Complex wrt_invariant(const PDCode& d, int r) {
  check_level(r);
  const Complex A = root_of_unity_A(r);
  Complex sum = 0;
  for (int a = 0; a <= r - 2; ++a) sum += delta_n(a, A) * colored_bracket(d, a, A);
  return sum;
}

}  // namespace knotq
