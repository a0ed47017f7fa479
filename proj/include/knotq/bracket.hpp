#pragma once

#include <cstddef>

#include "knotq/laurent.hpp"
#include "knotq/linkdata.hpp"

namespace knotq {

inline constexpr int kMaxStateSumCrossings = 24;

// Sum over all 2^N states of A^(#A - #B) delta^(loops - 1); crossings taken in
// PD order with bit k set meaning crossing k gets the B smoothing.
LaurentPoly bracket_state_sum(const PDCode& d, int threads = 1);
// (-A^3)^(-w) <K>
LaurentPoly normalized_f(const PDCode& d, const Orientation& o, int threads = 1);
LaurentPoly normalized_f(const PDCode& d, int threads = 1);
// Bracket of the closure, expanding each letter in TL_n.
LaurentPoly bracket_via_tl(const BraidWord& b);
// A<K> - A^-1<K'> = (A^2 - A^-2)<K_A>, K' = K with crossing k switched and
// K_A = K with crossing k given its A smoothing.
bool switching_check(const PDCode& d, std::size_t crossing);

// Unnormalized a-colored bracket: every strand replaced by a parallel copies
// (blackboard framing), one Jones-Wenzl projector per component. <O>_a = Delta_a,
// <L>_0 = 1, <L>_1 = delta <L>. Bounds: a <= 3, a * crossings <= 24.
Complex colored_bracket(const PDCode& d, int a, Complex A);
// The same evaluation without the size bounds.
Complex colored_bracket_unbounded(const PDCode& d, int a, Complex A);

}  // namespace knotq
