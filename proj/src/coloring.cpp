#include "knotq/coloring.hpp"

#include <algorithm>
#include <map>

#include "knotq/errors.hpp"

namespace knotq {

namespace {

std::uint8_t mod3(int v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

// mult. inverse mod 3 of 1 and 2 is itself
std::uint8_t inv3(std::uint8_t v) { return v; }

}  // namespace

ColoringSystem coloring_system(const PDCode& d) {
  validate(d);
  ColoringSystem s;
  std::map<int, int> index;
  for (const Crossing& x : d.crossings)
    for (int arc : x.arcs) index.emplace(arc, 0);
  for (auto& [id, k] : index) {
    k = static_cast<int>(s.edge_ids.size());
    s.edge_ids.push_back(id);
  }
  s.variables = static_cast<int>(s.edge_ids.size());
  s.free_loops = d.free_loops;
  for (const Crossing& x : d.crossings) {
    int a = index[x.arcs[0]], b = index[x.arcs[1]], c = index[x.arcs[2]], dd = index[x.arcs[3]];
    std::vector<std::uint8_t> same(s.variables, 0), rel(s.variables, 0);
    same[b] = mod3(same[b] + 1);
    same[dd] = mod3(same[dd] - 1);
    rel[b] = mod3(rel[b] + 2);
    rel[a] = mod3(rel[a] - 1);
    rel[c] = mod3(rel[c] - 1);
    s.rows.push_back(std::move(same));
    s.rows.push_back(std::move(rel));
  }
  return s;
}

int gf3_rank(std::vector<std::vector<std::uint8_t>> rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [col](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    auto& pr = rows[rank];
    std::uint8_t iv = inv3(pr[col]);
    for (auto& v : pr) v = mod3(v * iv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (int k = col; k < cols; ++k) rows[r][k] = mod3(rows[r][k] - f * pr[k]);
    }
    ++rank;
  }
  return rank;
}

int three_coloring_nullity(const PDCode& d) {
  ColoringSystem s = coloring_system(d);
  return s.variables - gf3_rank(s.rows, s.variables) + s.free_loops;
}

std::uint64_t three_coloring_count(const PDCode& d) {
  int k = three_coloring_nullity(d);
  if (k > 40) throw BoundExceeded("3-colouring count above 3^40");
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c *= 3;
  return c;
}

bool is_nontrivially_colorable(const PDCode& d) { return three_coloring_nullity(d) > 1; }

QuandleTable dihedral_quandle(int n) {
  if (n < 1) throw InvalidArgument("quandle needs at least one label");
  QuandleTable t{n, std::vector<int>(static_cast<std::size_t>(n * n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.op[static_cast<std::size_t>(x * n + y)] = ((2 * y - x) % n + n) % n;
  return t;
}

QuandleReport quandle_axiom_check(const QuandleTable& t) {
  QuandleReport rep;
  auto note = [&rep](const char* axiom, int x, int y, int z) {
    if (rep.violations.size() < 64) rep.violations.push_back({axiom, x, y, z});
  };
  const int n = t.n;
  if (n < 0 || t.op.size() != static_cast<std::size_t>(n) * n)
    throw InvalidArgument("quandle table must have n*n entries");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = t.at(x, y);
      if (v < 0 || v >= n) {
        rep.closed = false;
        note("closure", x, y, 0);
      }
    }
  // The other axioms only make sense on a closed table.
  if (!rep.closed) return rep;
  for (int x = 0; x < n; ++x) {
    if (t.at(x, x) != x) {
      ++rep.idempotence_failures;
      note("idempotence", x, x, 0);
    }
    for (int y = 0; y < n; ++y) {
      if (t.at(t.at(x, y), y) != x) {
        ++rep.involution_failures;
        note("involution", x, y, 0);
      }
      for (int z = 0; z < n; ++z) {
        if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z))) {
          ++rep.distributivity_failures;
          note("distributivity", x, y, z);
        }
      }
    }
  }
  return rep;
}

}  // namespace knotq
