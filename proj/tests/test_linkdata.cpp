#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "knotq/errors.hpp"
#include "knotq/linkdata.hpp"

using namespace knotq;

namespace {

int cycle_count(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int c = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (size_t j = i; !seen[j]; j = size_t(perm[j])) seen[j] = 1;
  }
  return c;
}

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> g(1, n - 1), s(0, 1);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(s(rng) ? g(rng) : -g(rng));
  return {n, w};
}

}  // namespace

TEST_SUITE("linkdata") {
  TEST_CASE("braid construction rejects bad letters") {
    CHECK_THROWS_AS(BraidWord(3, {3}), InvalidArgument);
    CHECK_THROWS_AS(BraidWord(3, {0}), InvalidArgument);
    CHECK_THROWS_AS(BraidWord(0, {}), InvalidArgument);
    CHECK_NOTHROW(BraidWord(3, {2, -2, 1}));
  }

  TEST_CASE("compose") {
    CHECK(braid_compose({2, {1}}, {2, {-1}}).letters == std::vector<int>{1, -1});
    CHECK(braid_compose({3, {1, 2}}, {3, {1}}).letters == std::vector<int>{1, 2, 1});
    BraidWord piece(3, {1, -2});
    BraidWord borromean = braid_compose(braid_compose(piece, piece), piece);
    CHECK(borromean.letters == std::vector<int>{1, -2, 1, -2, 1, -2});
    CHECK_THROWS_AS(braid_compose({2, {}}, {3, {}}), InvalidArgument);
  }

  TEST_CASE("exponent sum") {
    CHECK(exponent_sum({2, {1, 1, 1}}) == 3);
    CHECK(exponent_sum({3, {1, -2, 1, -2, 1, -2}}) == 0);
    CHECK(exponent_sum({3, {1, -2, 1}}) == 1);
  }

  TEST_CASE("permutation") {
    CHECK(braid_permutation({4, {}}) == std::vector<int>{0, 1, 2, 3});
    CHECK(braid_permutation({2, {1}}) == std::vector<int>{1, 0});
    CHECK(braid_permutation({3, {1, 2, 1}}) == std::vector<int>{2, 1, 0});
  }

  TEST_CASE("permutation composes as perm(b2) o perm(b1)") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      int n = 2 + int(rng() % 5);
      BraidWord b1 = random_braid(rng, n, int(rng() % 7)), b2 = random_braid(rng, n, int(rng() % 7));
      auto p1 = braid_permutation(b1), p2 = braid_permutation(b2), p12 = braid_permutation(braid_compose(b1, b2));
      for (int i = 0; i < n; ++i) CHECK(p12[i] == p2[p1[i]]);
    }
  }

  TEST_CASE("free reduction is explicit") {
    BraidWord b(3, {1, 2, -2, -1, 2});
    CHECK(exponent_sum(b) == 1);
    CHECK(b.letters.size() == 5);
    CHECK(free_reduce(b).letters == std::vector<int>{2});
    CHECK(free_reduce({2, {1, -1}}).letters.empty());
    CHECK(braid_inverse({3, {1, -2}}).letters == std::vector<int>{2, -1});
  }

  TEST_CASE("braid text") {
    BraidWord b = parse_braid("B3: s1 s2^-1 s1");
    CHECK(b == BraidWord(3, {1, -2, 1}));
    CHECK(to_string(b) == "B3: s1 s2^-1 s1");
    CHECK(parse_braid("B1:") == BraidWord(1, {}));
    CHECK(parse_braid(to_string(BraidWord(5, {4, -3, 2, -1}))) == BraidWord(5, {4, -3, 2, -1}));
    CHECK_THROWS_AS(parse_braid("B2: s2"), ParseError);
    CHECK_THROWS_AS(parse_braid("B2 s1"), ParseError);
    CHECK_THROWS_AS(parse_braid("s1 s1"), ParseError);
    CHECK_THROWS_AS(parse_braid("B2: t1"), ParseError);
  }

  TEST_CASE("trace closure examples") {
    PDCode trefoil = trace_closure({2, {1, 1, 1}});
    CHECK(trefoil.crossings.size() == 3);
    CHECK(component_count(trefoil) == 1);
    CHECK(writhe(trefoil) == 3);
    PDCode unknot = trace_closure({1, {}});
    CHECK(unknot.crossings.empty());
    CHECK(component_count(unknot) == 1);
    CHECK(writhe(unknot) == 0);
    PDCode borromean = trace_closure({3, {1, -2, 1, -2, 1, -2}});
    CHECK(component_count(borromean) == 3);
    CHECK(writhe(borromean) == 0);
    CHECK(writhe(pd_mirror(trefoil)) == -3);
  }

  TEST_CASE("closures pass validity; components match permutation cycles") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
      int n = 1 + int(rng() % 5);
      BraidWord b = n == 1 ? BraidWord(1, {}) : random_braid(rng, n, int(rng() % 9));
      PDCode d = trace_closure(b);
      CHECK_NOTHROW(validate(d));
      CHECK(int(d.crossings.size()) == int(b.letters.size()));
      CHECK(component_count(d) == cycle_count(braid_permutation(b)));
      CHECK(writhe(d) == exponent_sum(b));
      if (n % 2 == 0) CHECK_NOTHROW(validate(plat_closure(b)));
    }
  }

  TEST_CASE("arcs are labelled densely along the orientation") {
    PDCode d = trace_closure({3, {1, 2, 1, 2}});
    std::set<int> ids;
    for (const auto& x : d.crossings) ids.insert(x.arcs.begin(), x.arcs.end());
    CHECK(*ids.begin() == 1);
    CHECK(*ids.rbegin() == int(ids.size()));
    for (const auto& comp : pd_components(d))
      for (size_t i = 1; i < comp.size(); ++i) CHECK(comp[i] == comp[i - 1] + 1);
  }

  TEST_CASE("plat closures") {
    PDCode u = plat_closure({2, {}});
    CHECK(u.crossings.empty());
    CHECK(component_count(u) == 1);
    PDCode u2 = plat_closure({4, {}});
    CHECK(component_count(u2) == 2);
    PDCode t = plat_closure({4, {2, 2, 2}});
    CHECK(t.crossings.size() == 3);
    CHECK(component_count(t) == 1);
    CHECK(std::abs(writhe(t)) == 3);
    CHECK_THROWS_AS(plat_closure({3, {1}}), InvalidArgument);
  }

  TEST_CASE("writhe depends on relative orientation") {
    PDCode hopf = trace_closure({2, {1, 1}});
    CHECK(pd_components(hopf).size() == 2);
    CHECK(writhe(hopf) == 2);
    CHECK(writhe(hopf, {{true, false}}) == -2);
    CHECK(writhe(hopf, {{true, true}}) == 2);
    CHECK_THROWS_AS(writhe(hopf, {{true}}), InvalidArgument);
  }

  TEST_CASE("pd text") {
    PDCode d = parse_pd("X(1,5,2,4)+ X(3,1,4,6)+ X(5,3,6,2)+");
    CHECK(d.crossings.size() == 3);
    CHECK(parse_pd(to_string(d)) == d);
    PDCode inferred = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]");
    CHECK(inferred == d);
    PDCode withloop = parse_pd("X(1,1,2,2)+ O");
    CHECK(withloop.free_loops == 1);
    CHECK(to_string(withloop) == "X(1,1,2,2)+ O");
    CHECK(parse_pd("O").free_loops == 1);
    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)+"), InvalidArgument);
    CHECK_THROWS_AS(parse_pd("X(1,5,2,4)- X(3,1,4,6)+ X(5,3,6,2)+"), InvalidArgument);
    PDCode t = trace_closure({2, {1, 1, 1}});
    CHECK(parse_pd(to_string(t)) == t);
  }

  TEST_CASE("mirror and disjoint union") {
    PDCode t = trace_closure({2, {1, 1, 1}});
    CHECK(pd_mirror(pd_mirror(t)) == t);
    CHECK_NOTHROW(validate(pd_mirror(t)));
    PDCode u = disjoint_union(t, pd_mirror(t));
    CHECK(component_count(u) == 2);
    CHECK(writhe(u) == 0);
    CHECK_NOTHROW(validate(switch_crossing(t, 1)));
    CHECK(writhe(switch_crossing(t, 1)) == 1);
    CHECK(writhe(curl_unknot(1)) == 1);
    CHECK(writhe(curl_unknot(-1)) == -1);
    CHECK(component_count(curl_unknot(-1)) == 1);
  }
}
