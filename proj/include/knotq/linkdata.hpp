#pragma once

#include <array>
#include <string>
#include <vector>

namespace knotq {

// Letters are read top to bottom. Letter i > 0 is s_i, -i is s_i^-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> word);  // validates
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord braid_compose(const BraidWord& b1, const BraidWord& b2);
int exponent_sum(const BraidWord& b);
// perm[i] = bottom position (0-based) of the strand entering at top position i.
// perm(b1 b2) = perm(b2) o perm(b1).
std::vector<int> braid_permutation(const BraidWord& b);
// Cancels adjacent s_i s_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& b);
BraidWord braid_inverse(const BraidWord& b);
// Inserts s_i s_i^-1 before position pos (Reidemeister II fixture).
BraidWord insert_r2(const BraidWord& b, std::size_t pos, int i);

// "B3: s1 s2^-1 s1"
BraidWord parse_braid(const std::string& text);
std::string to_string(const BraidWord& b);

// Arcs listed counterclockwise from the incoming under-strand:
//
//        c                  c
//        ^                  ^
//   d ---|--> b        d <--|--- b
//        |                  |
//        a                  a
//    sign +1            sign -1
//
// The over-strand runs d->b on a positive crossing and b->d on a negative one.
// Smoothing A joins (a,b) and (c,d); smoothing B joins (a,d) and (b,c).
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PDCode {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // components without crossings
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Throws InvalidArgument unless every arc occurs exactly twice, once entering
// and once leaving a crossing.
void validate(const PDCode& d);
int arc_count(const PDCode& d);

// Components that carry crossings, each as its arcs in traversal order.
std::vector<std::vector<int>> pd_components(const PDCode& d);
int component_count(const PDCode& d);  // includes free loops

// reversed[k] flips component k of pd_components().
struct Orientation {
  std::vector<bool> reversed;
};
Orientation default_orientation(const PDCode& d);
int writhe(const PDCode& d, const Orientation& o);
int writhe(const PDCode& d);

PDCode trace_closure(const BraidWord& b);
PDCode plat_closure(const BraidWord& b);

// Every crossing switched.
PDCode pd_mirror(const PDCode& d);
// Crossing k switched.
PDCode switch_crossing(const PDCode& d, std::size_t k);
PDCode disjoint_union(const PDCode& d1, const PDCode& d2);
// Unknot with a single curl of the given sign.
PDCode curl_unknot(int sign);

// Tokens X(a,b,c,d)+ / X(a,b,c,d)- / X(a,b,c,d) (sign inferred) and O.
// Separators between tokens may be whitespace or commas.
PDCode parse_pd(const std::string& text);
std::string to_string(const PDCode& d);

}  // namespace knotq
