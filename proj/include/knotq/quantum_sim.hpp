#pragma once

#include <cstdint>

#include "knotq/braid_reps.hpp"
#include "knotq/cmatrix.hpp"
#include "knotq/linkdata.hpp"

namespace knotq {

// SplitMix64. The stream for chunk k of seed s starts from mix(s) + k*gamma2,
// so counts never depend on how chunks are spread over threads.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  SplitMix64(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  // uniform on [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

struct TrialBudget {
  long long trials = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Trials are drawn in fixed chunks; chunk k uses stream k.
inline constexpr long long kTrialChunk = 1 << 16;

enum class HadamardPart { Re, Im };

struct HadamardEstimate {
  double p0 = 0;       // observed frequency of outcome 0 on the control
  double exact_p0 = 0;
  double stderr_p0 = 0;
  // 2 p0 - 1, the estimate of Re or Im <psi|U|psi>
  double value() const { return 2 * p0 - 1; }
  double exact_value() const { return 2 * exact_p0 - 1; }
};

// Control in |+> (or S^dagger|+> for Im), controlled-U, H, measure. Outcome 0
// has probability 1/2 + 1/2 Re<psi|U|psi> (Im for the second variant), read
// off the simulated final state and sampled trials times.
HadamardEstimate hadamard_test(const ComplexMatrix& U, const ComplexVector& psi,
                               HadamardPart part, const TrialBudget& budget);

struct TraceEstimate {
  Complex value;
  Complex exact;
  double stderr_re = 0, stderr_im = 0;
};
// Sum of the Hadamard-test estimates over the standard basis.
TraceEstimate trace_estimate(const ComplexMatrix& U, const TrialBudget& budget);

struct Jones3Estimate {
  Complex estimate;  // estimated trace plus the exact correction
  Complex exact;     // same formula with the exact trace
  double stderr = 0;
};
// <closure of b> at A = e^{i theta} as tr Phi(b) + A^{e(b)} (d^2 - 2), with
// Phi the unitary 2x2 representation. Throws outside its unitary ranges.
Jones3Estimate jones_3braid(const BraidWord& b, double theta, const TrialBudget& budget);
// Exact path only.
Complex jones_3braid_exact(const BraidWord& b, double theta);

enum class PlatRoute {
  Auto,      // Fibonacci process space when it applies, otherwise cup states
  Fibonacci,  // a = 2 at A = e^{3 pi i/5}
  CupStates,  // TL action on planar cup states with Jones-Wenzl projectors
};

// Largest strands * colour for the cup-state route (Catalan(8) states).
inline constexpr int kMaxPlatPoints = 16;

// <plat closure of b>_a (unnormalized colored bracket, same convention as
// colored_bracket). The Fibonacci route is <v0|rho(b)|v0> Delta_2^{n/2}, with
// v0 the paired vacuum, first in the process-space basis.
Complex colored_plat(const BraidWord& b, int a, Complex A, PlatRoute route = PlatRoute::Auto);
Complex colored_plat_at_level(const BraidWord& b, int a, int r);

// Process space of n P's fusing to the vacuum, left-associated. Each state
// lists y_1 .. y_{n-1} (y_k the charge of the first k strands).
std::vector<std::string> fib_process_basis(int n);
// Generator images on fib_process_basis(n): s_k -> conj(R) in the local
// channel, F conj(R) F when the channel is two-dimensional.
RepMatrixSet fib_process_rep(int n);

// Sum over a = 0 .. r-2 of Delta_a <L>_a at A = e^{i pi/2r}, r in {3, 4, 5}.
Complex wrt_invariant(const BraidWord& plat, int r);
Complex wrt_invariant(const PDCode& d, int r);

}  // namespace knotq
