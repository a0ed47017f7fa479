#include "knotq/bracket.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <thread>

#include "knotq/contraction.hpp"
#include "knotq/errors.hpp"
#include "knotq/qnumbers.hpp"
#include "knotq/tl_algebra.hpp"

namespace knotq {

namespace {

using Histogram = std::vector<std::vector<std::int64_t>>;  // [#A][loops]

// Dense arc relabelling: record k holds its four arcs as 0..E-1.
std::vector<std::array<int, 4>> dense_arcs(const PDCode& d, int& arcs) {
  std::map<int, int> id;
  std::vector<std::array<int, 4>> out;
  for (const auto& x : d.crossings) {
    std::array<int, 4> r{};
    for (int s = 0; s < 4; ++s) {
      auto [it, fresh] = id.try_emplace(x.arcs[s], int(id.size()));
      r[s] = it->second;
    }
    out.push_back(r);
  }
  arcs = int(id.size());
  return out;
}

// Loops of one state. Bit k of mask set -> crossing k B-smoothed. forced, if
// >= 0, is a crossing whose A smoothing is fixed regardless of the mask.
void enumerate(const std::vector<std::array<int, 4>>& x, int arcs, std::uint64_t lo, std::uint64_t hi,
               const std::vector<int>& free_index, int forced, Histogram& hist) {
  std::vector<int> parent(arcs);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const int nfree = int(free_index.size());
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    for (int v = 0; v < arcs; ++v) parent[v] = v;
    int comps = arcs;
    auto join = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    };
    int nb = 0;
    if (forced >= 0) {
      join(x[forced][0], x[forced][1]);
      join(x[forced][2], x[forced][3]);
    }
    for (int j = 0; j < nfree; ++j) {
      const auto& r = x[free_index[j]];
      if (mask >> j & 1) {
        ++nb;
        join(r[0], r[3]);
        join(r[1], r[2]);
      } else {
        join(r[0], r[1]);
        join(r[2], r[3]);
      }
    }
    ++hist[nfree - nb][comps];
  }
}

LaurentPoly state_sum(const PDCode& d, int forced, int threads) {
  validate(d);
  const int n = int(d.crossings.size());
  if (n > kMaxStateSumCrossings)
    throw BoundExceeded("state sum limited to " + std::to_string(kMaxStateSumCrossings) + " crossings, got " +
                        std::to_string(n));
  if (n == 0 && d.free_loops == 0) throw InvalidArgument("bracket of the empty diagram");
  int arcs = 0;
  auto x = dense_arcs(d, arcs);
  std::vector<int> free_index;
  for (int k = 0; k < n; ++k)
    if (k != forced) free_index.push_back(k);
  const int nfree = int(free_index.size());
  const std::uint64_t total = std::uint64_t(1) << nfree;
  threads = std::max(1, std::min<int>(threads, int(std::min<std::uint64_t>(total, 64))));

  std::vector<Histogram> parts(threads, Histogram(nfree + 1, std::vector<std::int64_t>(arcs + 1, 0)));
  if (threads == 1) {
    enumerate(x, arcs, 0, total, free_index, forced, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] { enumerate(x, arcs, lo, hi, free_index, forced, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }

  LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> dpow{LaurentPoly(1)};
  LaurentPoly result;
  for (int na = 0; na <= nfree; ++na)
    for (int loops = 0; loops <= arcs; ++loops) {
      std::int64_t c = 0;
      for (const auto& h : parts) c += h[na][loops];
      if (!c) continue;
      int k = loops + d.free_loops - 1;
      while (int(dpow.size()) <= k) dpow.push_back(dpow.back() * delta);
      result += LaurentPoly::monomial(2 * na - nfree, BigInt(c)) * dpow[k];
    }
  return result;
}

}  // namespace

LaurentPoly bracket_state_sum(const PDCode& d, int threads) { return state_sum(d, -1, threads); }

LaurentPoly normalized_f(const PDCode& d, const Orientation& o, int threads) {
  int w = writhe(d, o);
  return LaurentPoly::monomial(-3 * w, w % 2 ? -1 : 1) * bracket_state_sum(d, threads);
}

LaurentPoly normalized_f(const PDCode& d, int threads) { return normalized_f(d, default_orientation(d), threads); }

LaurentPoly bracket_via_tl(const BraidWord& b) {
  const int n = b.strands;
  std::map<int, TLSymbolic> phi;
  auto image = [&](int l) -> const TLSymbolic& {
    auto it = phi.find(l);
    if (it != phi.end()) return it->second;
    int e = l > 0 ? 1 : -1;
    TLSymbolic x = LaurentPoly::monomial(e) * tl_identity(n) + LaurentPoly::monomial(-e) * tl_generator(n, std::abs(l));
    return phi.emplace(l, std::move(x)).first->second;
  };
  TLSymbolic acc = tl_identity(n);
  for (int l : b.letters) acc = acc * image(l);
  return tl_closure(acc);
}

bool switching_check(const PDCode& d, std::size_t crossing) {
  if (crossing >= d.crossings.size()) throw InvalidArgument("switching_check: crossing index out of range");
  LaurentPoly k = bracket_state_sum(d);
  LaurentPoly kbar = bracket_state_sum(switch_crossing(d, crossing));
  LaurentPoly ka = state_sum(d, int(crossing), 1);
  LaurentPoly lhs = LaurentPoly::monomial(1) * k - LaurentPoly::monomial(-1) * kbar;
  LaurentPoly rhs = (LaurentPoly::monomial(2) - LaurentPoly::monomial(-2)) * ka;
  return lhs == rhs;
}

Complex colored_bracket(const PDCode& d, int a, Complex A) {
  if (a < 0) throw InvalidArgument("color must be non-negative");
  if (a > 3) throw BoundExceeded("colored_bracket supports a <= 3");
  if (a * int(d.crossings.size()) > 24) throw BoundExceeded("colored_bracket requires a * crossings <= 24");
  return colored_bracket_unbounded(d, a, A);
}

Complex colored_bracket_unbounded(const PDCode& d, int m, Complex A) {
  validate(d);
  if (m < 0) throw InvalidArgument("color must be non-negative");
  if (m == 0) return 1.0;
  const TLNumeric proj = jones_wenzl(m, A);
  const Complex loop = loop_chebyshev(m, A);

  std::map<int, bool> split;  // first arc of each component gets the projector
  for (const auto& comp : pd_components(d)) split[comp.front()] = true;

  int next_id = 0;
  std::map<std::pair<int, int>, int> base, after;
  auto base_id = [&](int e, int k) {
    auto [it, fresh] = base.try_emplace({e, k}, next_id);
    if (fresh) ++next_id;
    return it->second;
  };
  auto after_id = [&](int e, int k) {
    auto [it, fresh] = after.try_emplace({e, k}, next_id);
    if (fresh) ++next_id;
    return it->second;
  };
  // Ends entering a crossing from a split arc attach to the projector's far side.
  auto ext = [&](int e, int k, bool entering) { return entering && split.count(e) ? after_id(e, k) : base_id(e, k); };

  std::vector<NetworkNode<Complex>> nodes;
  const Complex Ainv = 1.0 / A;
  for (const auto& x : d.crossings) {
    const auto& [a, b, c, dd] = x.arcs;
    const bool pos = x.sign > 0;
    std::vector<std::vector<int>> v(m, std::vector<int>(m + 1)), h(m, std::vector<int>(m + 1));
    for (int i = 0; i < m; ++i) {
      v[i][0] = ext(a, i, true);
      v[i][m] = ext(c, i, false);
      for (int y = 1; y < m; ++y) v[i][y] = next_id++;
    }
    for (int y = 0; y < m; ++y) {
      int j = pos ? m - 1 - y : y;  // copy index counted from the left of travel
      h[y][0] = ext(dd, j, pos);
      h[y][m] = ext(b, j, !pos);
      for (int xx = 1; xx < m; ++xx) h[y][xx] = next_id++;
    }
    for (int i = 0; i < m; ++i)
      for (int y = 0; y < m; ++y)
        nodes.push_back(crossing_node<Complex>({v[i][y], h[y][i + 1], v[i][y + 1], h[y][i]}, A, Ainv));
  }
  for (const auto& [e, unused] : split) {
    NetworkNode<Complex> box;
    for (int k = 0; k < m; ++k) box.ends.push_back(base_id(e, k));
    for (int k = 0; k < m; ++k) box.ends.push_back(after_id(e, k));
    for (const auto& [diag, coeff] : proj.terms()) {
      std::vector<std::pair<int, int>> pairs;
      auto local = [&](int pt) { return pt < m ? m + pt : pt - m; };
      for (int pt = 0; pt < 2 * m; ++pt)
        if (diag.pair[pt] > pt) pairs.emplace_back(local(pt), local(diag.pair[pt]));
      box.options.emplace_back(coeff, std::move(pairs));
    }
    nodes.push_back(std::move(box));
  }
  Complex value = contract_network(nodes, loop_value_at(A), 0);
  for (int k = 0; k < d.free_loops; ++k) value *= loop;
  return value;
}

}  // namespace knotq
