#include "knotq/linkdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "knotq/errors.hpp"

namespace knotq {

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
  if (n < 1) throw InvalidArgument("braid needs at least one strand");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= n)
      throw InvalidArgument("braid letter " + std::to_string(l) + " invalid on " +
                            std::to_string(n) + " strands");
}

BraidWord braid_compose(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands != b2.strands) throw InvalidArgument("braid_compose: strand counts differ");
  std::vector<int> w = b1.letters;
  w.insert(w.end(), b2.letters.begin(), b2.letters.end());
  return {b1.strands, std::move(w)};
}

int exponent_sum(const BraidWord& b) {
  int s = 0;
  for (int l : b.letters) s += l > 0 ? 1 : -1;
  return s;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  // where[p] = top strand currently at position p
  std::vector<int> where(b.strands);
  std::iota(where.begin(), where.end(), 0);
  for (int l : b.letters) {
    int p = std::abs(l) - 1;
    std::swap(where[p], where[p + 1]);
  }
  std::vector<int> perm(b.strands);
  for (int p = 0; p < b.strands; ++p) perm[where[p]] = p;
  return perm;
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> out;
  for (int l : b.letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return {b.strands, std::move(out)};
}

BraidWord braid_inverse(const BraidWord& b) {
  std::vector<int> w(b.letters.rbegin(), b.letters.rend());
  for (int& l : w) l = -l;
  return {b.strands, std::move(w)};
}

BraidWord insert_r2(const BraidWord& b, std::size_t pos, int i) {
  if (pos > b.letters.size()) throw InvalidArgument("insert_r2: position out of range");
  std::vector<int> w = b.letters;
  w.insert(w.begin() + long(pos), {i, -i});
  return {b.strands, std::move(w)};
}

BraidWord parse_braid(const std::string& text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> int {
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw ParseError("expected a number", long(i));
    int v = std::stoi(text.substr(i, j - i));
    i = j;
    return v;
  };
  skip();
  if (i >= text.size() || text[i] != 'B') throw ParseError("braid must start with 'B<n>:'", long(i));
  ++i;
  int n = number();
  skip();
  if (i >= text.size() || text[i] != ':') throw ParseError("expected ':'", long(i));
  ++i;
  std::vector<int> letters;
  for (skip(); i < text.size(); skip()) {
    size_t at = i;
    if (text[i] != 's') throw ParseError("expected generator 's<i>'", long(i));
    ++i;
    int g = number();
    int sign = 1;
    if (text.compare(i, 3, "^-1") == 0) {
      sign = -1;
      i += 3;
    } else if (text.compare(i, 2, "^1") == 0) {
      i += 2;
    }
    if (g < 1 || g >= n) throw ParseError("generator index out of range", long(at));
    letters.push_back(sign * g);
  }
  return {n, std::move(letters)};
}

std::string to_string(const BraidWord& b) {
  std::ostringstream os;
  os << 'B' << b.strands << ':';
  for (int l : b.letters) os << " s" << std::abs(l) << (l < 0 ? "^-1" : "");
  return os.str();
}

namespace {

bool enters(const Crossing& x, int slot) {
  return slot == 0 || (x.sign > 0 ? slot == 3 : slot == 1);
}

// Position of the arc leaving x on the same strand as slot.
int through(int slot) { return (slot + 2) % 4; }

struct Ends {
  // for each arc: (crossing, slot) where it enters, and where it leaves
  std::map<int, std::pair<int, int>> in, out;
};

Ends collect_ends(const PDCode& d) {
  Ends e;
  std::map<int, int> seen;
  for (size_t k = 0; k < d.crossings.size(); ++k) {
    const Crossing& x = d.crossings[k];
    if (x.sign != 1 && x.sign != -1)
      throw InvalidArgument("crossing " + std::to_string(k) + " has sign other than +-1");
    for (int s = 0; s < 4; ++s) {
      int arc = x.arcs[s];
      ++seen[arc];
      auto& side = enters(x, s) ? e.in : e.out;
      if (!side.emplace(arc, std::pair{int(k), s}).second)
        throw InvalidArgument("arc " + std::to_string(arc) + (enters(x, s) ? " enters" : " leaves") +
                              " two crossings; orientation is inconsistent");
    }
  }
  for (auto [arc, n] : seen)
    if (n != 2) throw InvalidArgument("arc " + std::to_string(arc) + " occurs " + std::to_string(n) + " times");
  if (d.free_loops < 0) throw InvalidArgument("negative free loop count");
  return e;
}

}  // namespace

void validate(const PDCode& d) { collect_ends(d); }

int arc_count(const PDCode& d) {
  std::set<int> ids;
  for (const auto& x : d.crossings) ids.insert(x.arcs.begin(), x.arcs.end());
  return int(ids.size());
}

std::vector<std::vector<int>> pd_components(const PDCode& d) {
  Ends e = collect_ends(d);
  std::set<int> visited;
  std::vector<std::vector<int>> comps;
  for (const auto& [start, unused] : e.in) {
    if (visited.count(start)) continue;
    std::vector<int> comp;
    int arc = start;
    do {
      visited.insert(arc);
      comp.push_back(arc);
      auto [k, s] = e.in.at(arc);
      arc = d.crossings[k].arcs[through(s)];
    } while (arc != start);
    comps.push_back(std::move(comp));
  }
  return comps;
}

int component_count(const PDCode& d) { return int(pd_components(d).size()) + d.free_loops; }

Orientation default_orientation(const PDCode& d) {
  return {std::vector<bool>(pd_components(d).size(), false)};
}

int writhe(const PDCode& d, const Orientation& o) {
  auto comps = pd_components(d);
  if (o.reversed.size() != comps.size())
    throw InvalidArgument("orientation has " + std::to_string(o.reversed.size()) + " entries for " +
                          std::to_string(comps.size()) + " components");
  std::map<int, size_t> comp_of;
  for (size_t c = 0; c < comps.size(); ++c)
    for (int arc : comps[c]) comp_of[arc] = c;
  int w = 0;
  for (const auto& x : d.crossings) {
    bool flip = o.reversed[comp_of[x.arcs[0]]] != o.reversed[comp_of[x.arcs[1]]];
    w += flip ? -x.sign : x.sign;
  }
  return w;
}

int writhe(const PDCode& d) { return writhe(d, default_orientation(d)); }

namespace {

// Crossing seen from a braid diagram drawn bottom to top. Corner order
// SW, SE, NE, NW is counterclockwise.
struct BoxCrossing {
  std::array<int, 4> corner;
  bool over_sw_ne;
};

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(int(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Orients every strand, relabels arcs densely in traversal order and emits PD records.
PDCode orient_and_label(std::vector<BoxCrossing> box, UnionFind& uf) {
  const int nx = int(box.size());
  for (auto& b : box)
    for (int& c : b.corner) c = uf.find(c);
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int k = 0; k < nx; ++k)
    for (int c = 0; c < 4; ++c) ends[box[k].corner[c]].emplace_back(k, c);

  std::vector<std::array<int, 2>> in_corner(nx, {-1, -1});  // [0] SW-NE strand, [1] SE-NW strand
  std::vector<std::array<bool, 4>> done(nx, {false, false, false, false});
  std::map<int, int> label;
  int next = 1;
  for (int k0 = 0; k0 < nx; ++k0) {
    for (int c0 : {0, 1}) {
      if (done[k0][c0]) continue;
      int k = k0, c = c0;
      if (!label.count(box[k].corner[c])) label[box[k].corner[c]] = next++;
      do {
        int out = (c + 2) % 4;
        done[k][c] = done[k][out] = true;
        in_corner[k][c % 2] = c;
        int arc = box[k].corner[out];
        if (!label.count(arc)) label[arc] = next++;
        const auto& pair = ends[arc];
        auto other = pair[0] == std::pair{k, out} ? pair[1] : pair[0];
        k = other.first;
        c = other.second;
      } while (!(k == k0 && c == c0));
    }
  }

  PDCode pd;
  for (int k = 0; k < nx; ++k) {
    const auto& b = box[k];
    int u = in_corner[k][b.over_sw_ne ? 1 : 0];
    int o = in_corner[k][b.over_sw_ne ? 0 : 1];
    Crossing x;
    for (int s = 0; s < 4; ++s) x.arcs[s] = label.at(b.corner[(u + s) % 4]);
    x.sign = o == (u + 3) % 4 ? 1 : -1;
    pd.crossings.push_back(x);
  }
  return pd;
}

int count_free(UnionFind& uf, const std::vector<int>& ids, const std::vector<BoxCrossing>& box) {
  std::set<int> used, all;
  for (const auto& b : box)
    for (int c : b.corner) used.insert(uf.find(c));
  for (int id : ids) all.insert(uf.find(id));
  int n = 0;
  for (int r : all) n += used.count(r) ? 0 : 1;
  return n;
}

// Stacks the letters from the bottom (last letter) up; returns the top arcs.
std::vector<int> build_box(const BraidWord& b, const std::vector<int>& bottom, UnionFind& uf,
                           std::vector<BoxCrossing>& box, std::vector<int>& ids) {
  std::vector<int> cur = bottom;
  box.assign(b.letters.size(), {});
  for (size_t j = b.letters.size(); j-- > 0;) {
    int l = b.letters[j];
    int p = std::abs(l) - 1;
    int nw = uf.make(), ne = uf.make();
    ids.push_back(nw);
    ids.push_back(ne);
    box[j] = {{cur[p], cur[p + 1], ne, nw}, l > 0};
    cur[p] = nw;
    cur[p + 1] = ne;
  }
  return cur;
}

}  // namespace

PDCode trace_closure(const BraidWord& b) {
  UnionFind uf;
  std::vector<int> bottom(b.strands), ids;
  for (int& a : bottom) ids.push_back(a = uf.make());
  std::vector<BoxCrossing> box;
  auto top = build_box(b, bottom, uf, box, ids);
  for (int p = 0; p < b.strands; ++p) uf.join(top[p], bottom[p]);
  int free = count_free(uf, ids, box);
  PDCode pd = orient_and_label(box, uf);
  pd.free_loops = free;
  return pd;
}

PDCode plat_closure(const BraidWord& b) {
  if (b.strands % 2) throw InvalidArgument("plat closure needs an even strand count");
  UnionFind uf;
  std::vector<int> bottom(b.strands), ids;
  for (int p = 0; p < b.strands; p += 2) {
    ids.push_back(bottom[p] = uf.make());
    bottom[p + 1] = bottom[p];
  }
  std::vector<BoxCrossing> box;
  auto top = build_box(b, bottom, uf, box, ids);
  for (int p = 0; p < b.strands; p += 2) uf.join(top[p], top[p + 1]);
  int free = count_free(uf, ids, box);
  PDCode pd = orient_and_label(box, uf);
  pd.free_loops = free;
  return pd;
}

namespace {
Crossing switched(const Crossing& x) {
  const auto& [a, b, c, d] = x.arcs;
  if (x.sign > 0) return {{d, a, b, c}, -1};
  return {{b, c, d, a}, 1};
}
}  // namespace

PDCode pd_mirror(const PDCode& d) {
  PDCode m = d;
  for (auto& x : m.crossings) x = switched(x);
  return m;
}

PDCode switch_crossing(const PDCode& d, std::size_t k) {
  if (k >= d.crossings.size()) throw InvalidArgument("crossing index out of range");
  PDCode m = d;
  m.crossings[k] = switched(m.crossings[k]);
  return m;
}

PDCode disjoint_union(const PDCode& d1, const PDCode& d2) {
  int shift = 0;
  for (const auto& x : d1.crossings)
    for (int a : x.arcs) shift = std::max(shift, a);
  PDCode u = d1;
  for (auto x : d2.crossings) {
    for (int& a : x.arcs) a += shift;
    u.crossings.push_back(x);
  }
  u.free_loops += d2.free_loops;
  return u;
}

PDCode curl_unknot(int sign) {
  if (sign > 0) return {{{{1, 1, 2, 2}, 1}}, 0};
  return {{{{1, 2, 2, 1}, -1}}, 0};
}

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  size_t i = 0;
  auto sep = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  sep();
  bool wrapped = text.compare(i, 3, "PD[") == 0;
  if (wrapped) i += 3;
  for (sep(); i < text.size(); sep()) {
    if (wrapped && text[i] == ']') {
      ++i;
      sep();
      if (i != text.size()) throw ParseError("trailing input after PD[...]", long(i));
      wrapped = false;
      break;
    }
    if (text[i] == 'O') {
      ++pd.free_loops;
      ++i;
      continue;
    }
    if (text[i] != 'X') throw ParseError("expected 'X(' or 'O'", long(i));
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw ParseError("expected '(' after X", long(i));
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    Crossing x;
    for (int s = 0; s < 4; ++s) {
      while (i < text.size() && text[i] == ' ') ++i;
      size_t j = i;
      if (j < text.size() && text[j] == '-') ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("expected arc label", long(i));
      x.arcs[s] = std::stoi(text.substr(i, j - i));
      i = j;
      while (i < text.size() && text[i] == ' ') ++i;
      char want = s < 3 ? ',' : close;
      if (i >= text.size() || text[i] != want) throw ParseError(std::string("expected '") + want + "'", long(i));
      ++i;
    }
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      x.sign = text[i] == '+' ? 1 : -1;
      ++i;
    } else {
      int b = x.arcs[1], d = x.arcs[3];
      x.sign = (b - d == 1 || d - b > 1) ? 1 : -1;
    }
    pd.crossings.push_back(x);
  }
  if (wrapped) throw ParseError("missing ']'", long(text.size()));
  validate(pd);
  return pd;
}

std::string to_string(const PDCode& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings) {
    os << (first ? "" : " ") << "X(" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ','
       << x.arcs[3] << ')' << (x.sign > 0 ? '+' : '-');
    first = false;
  }
  for (int k = 0; k < d.free_loops; ++k) {
    os << (first ? "" : " ") << 'O';
    first = false;
  }
  return os.str();
}

}  // namespace knotq
