#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "knotq/errors.hpp"
#include "knotq/scalar.hpp"

namespace knotq {

// A vertex of a planar network. Each option is one way of joining the ends in
// pairs (local end indices), with a weight. A crossing has two options, a
// projector box has one option per diagram in its expansion.
template <class Coeff>
struct NetworkNode {
  std::vector<int> ends;
  std::vector<std::pair<Coeff, std::vector<std::pair<int, int>>>> options;
};

// Sums weight * delta^loops over all option choices, where loops counts the
// closed curves formed, plus free_loops extra circles. Nodes are absorbed one
// at a time; the state is the matching induced on the arcs crossing the
// frontier, so cost depends on frontier width rather than node count.
template <class Coeff>
Coeff contract_network(const std::vector<NetworkNode<Coeff>>& nodes, const Coeff& delta, int free_loops) {
  std::map<int, int> uses;
  for (const auto& nd : nodes)
    for (int a : nd.ends) ++uses[a];
  for (auto [a, k] : uses)
    if (k != 2) throw InvalidArgument("network arc " + std::to_string(a) + " has " + std::to_string(k) + " ends");

  std::vector<Coeff> dpow{Coeff(1)};
  auto dp = [&](int k) -> const Coeff& {
    while (int(dpow.size()) <= k) dpow.push_back(dpow.back() * delta);
    return dpow[k];
  };

  std::vector<int> open;  // sorted arc ids with exactly one absorbed end
  std::map<std::vector<int>, Coeff> states;
  states.emplace(std::vector<int>{}, Coeff(1));
  std::vector<char> done(nodes.size(), 0);

  for (size_t step = 0; step < nodes.size(); ++step) {
    // Greedy choice: the node that closes the most frontier arcs.
    size_t best = nodes.size();
    int best_score = -1 << 30;
    for (size_t v = 0; v < nodes.size(); ++v) {
      if (done[v]) continue;
      int score = 0;
      for (int a : nodes[v].ends) score += std::binary_search(open.begin(), open.end(), a) ? 2 : -1;
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    done[best] = 1;
    const auto& nd = nodes[best];

    // Local vertices: current open arcs first, then arcs first met here.
    std::map<int, int> vid;
    for (size_t i = 0; i < open.size(); ++i) vid[open[i]] = int(i);
    std::map<int, int> count_here;
    for (int a : nd.ends) ++count_here[a];
    std::vector<int> local_arc = open;
    for (int a : nd.ends)
      if (!vid.count(a)) {
        vid[a] = int(local_arc.size());
        local_arc.push_back(a);
      }
    const int nv = int(local_arc.size());
    std::vector<int> next_open;
    for (int a : local_arc) {
      bool was_open = std::binary_search(open.begin(), open.end(), a);
      int here = count_here.count(a) ? count_here[a] : 0;
      if ((was_open && here == 0) || (!was_open && here == 1)) next_open.push_back(a);
    }
    std::sort(next_open.begin(), next_open.end());
    std::vector<int> pos_in_next(nv, -1);
    for (size_t i = 0; i < next_open.size(); ++i) pos_in_next[vid[next_open[i]]] = int(i);

    std::map<std::vector<int>, Coeff> next;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbour, edge id)
    std::vector<char> seen(nv);
    for (const auto& [key, coeff] : states) {
      for (const auto& [weight, pairs] : nd.options) {
        edges.clear();
        for (auto& a : adj) a.clear();
        for (size_t i = 0; i < key.size(); ++i)
          if (int(i) < key[i]) edges.emplace_back(int(i), key[i]);
        for (auto [p, q] : pairs) edges.emplace_back(vid[nd.ends[p]], vid[nd.ends[q]]);
        for (size_t e = 0; e < edges.size(); ++e) {
          adj[edges[e].first].emplace_back(edges[e].second, int(e));
          adj[edges[e].second].emplace_back(edges[e].first, int(e));
        }
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> nkey(next_open.size(), -1);
        auto walk = [&](int v) {
          int prev_edge = -1;
          seen[v] = 1;
          for (;;) {
            int step_to = -1, via = -1;
            for (auto [w, e] : adj[v])
              if (e != prev_edge) {
                step_to = w;
                via = e;
                break;
              }
            if (step_to < 0) return v;
            prev_edge = via;
            v = step_to;
            if (seen[v]) return v;
            seen[v] = 1;
            if (adj[v].size() == 1) return v;
          }
        };
        for (int v = 0; v < nv; ++v) {
          if (seen[v] || pos_in_next[v] < 0) continue;
          int w = walk(v);
          nkey[pos_in_next[v]] = pos_in_next[w];
          nkey[pos_in_next[w]] = pos_in_next[v];
        }
        int loops = 0;
        for (int v = 0; v < nv; ++v)
          if (!seen[v]) {
            walk(v);
            ++loops;
          }
        Coeff c = coeff * weight * dp(loops);
        if (is_zero_coeff(c)) continue;
        auto [it, fresh] = next.try_emplace(std::move(nkey), c);
        if (!fresh) it->second = it->second + c;
      }
    }
    states = std::move(next);
    open = std::move(next_open);
  }
  Coeff total(0);
  for (const auto& [key, c] : states) total = total + c;
  return total * dp(free_loops);
}

// Crossing node with the bracket weights: A joins (a,b),(c,d); A^-1 joins (a,d),(b,c).
template <class Coeff>
NetworkNode<Coeff> crossing_node(const std::array<int, 4>& arcs, const Coeff& A, const Coeff& Ainv) {
  return {{arcs[0], arcs[1], arcs[2], arcs[3]}, {{A, {{0, 1}, {2, 3}}}, {Ainv, {{0, 3}, {1, 2}}}}};
}

}  // namespace knotq
