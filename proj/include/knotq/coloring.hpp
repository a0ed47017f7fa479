#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotq/linkdata.hpp"

namespace knotq {

// Linear system over GF(3) in one variable per PD edge. Each crossing gives
// two rows: x_b - x_d = 0 (the over-strand keeps its colour) and
// 2 x_b - x_a - x_c = 0. Entries are 0, 1, 2.
struct ColoringSystem {
  int variables = 0;
  std::vector<int> edge_ids;              // variable k is edge edge_ids[k]
  std::vector<std::vector<std::uint8_t>> rows;
  int free_loops = 0;                     // each adds an unconstrained colour
};

ColoringSystem coloring_system(const PDCode& d);
// Rank of the rows over GF(3).
int gf3_rank(std::vector<std::vector<std::uint8_t>> rows, int cols);

// Dimension of the solution space, free loops included.
int three_coloring_nullity(const PDCode& d);
// 3^nullity. BoundExceeded past 3^40.
std::uint64_t three_coloring_count(const PDCode& d);
bool is_nontrivially_colorable(const PDCode& d);

// x*y = op[x * n + y] on labels 0..n-1.
struct QuandleTable {
  int n = 0;
  std::vector<int> op;
  int at(int x, int y) const { return op[static_cast<std::size_t>(x * n + y)]; }
};

// x*y = 2y - x mod n. n = 3 is the three-colour quandle.
QuandleTable dihedral_quandle(int n);

struct QuandleViolation {
  std::string axiom;  // "closure", "idempotence", "involution", "distributivity"
  int x = 0, y = 0, z = 0;
};

struct QuandleReport {
  bool closed = true;
  long idempotence_failures = 0;
  long involution_failures = 0;
  long distributivity_failures = 0;
  std::vector<QuandleViolation> violations;  // first 64 only
  bool ok() const {
    return closed && idempotence_failures == 0 && involution_failures == 0 &&
           distributivity_failures == 0;
  }
};

// x*x = x, (x*y)*y = x, (x*y)*z = (x*z)*(y*z), checked exhaustively.
QuandleReport quandle_axiom_check(const QuandleTable& t);

}  // namespace knotq
