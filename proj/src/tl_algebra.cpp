#include "knotq/tl_algebra.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "knotq/qnumbers.hpp"

namespace knotq {

TLDiagram TLDiagram::identity(int n) {
  TLDiagram d{n, std::vector<std::uint8_t>(2 * n)};
  for (int j = 0; j < n; ++j) {
    d.pair[j] = std::uint8_t(n + j);
    d.pair[n + j] = std::uint8_t(j);
  }
  return d;
}

TLDiagram TLDiagram::cupcap(int n, int i) {
  if (i < 1 || i > n - 1)
    throw InvalidArgument("U_" + std::to_string(i) + " does not exist in TL_" + std::to_string(n));
  TLDiagram d = identity(n);
  int p = i - 1;
  d.pair[p] = std::uint8_t(p + 1);
  d.pair[p + 1] = std::uint8_t(p);
  d.pair[n + p] = std::uint8_t(n + p + 1);
  d.pair[n + p + 1] = std::uint8_t(n + p);
  return d;
}

TLDiagram TLDiagram::from_pairs(int n, const std::vector<std::pair<int, int>>& chords) {
  TLDiagram d{n, std::vector<std::uint8_t>(2 * n, 0xff)};
  if (int(chords.size()) != n) throw InvalidArgument("TL diagram needs exactly n chords");
  for (auto [p, q] : chords) {
    if (p < 0 || q < 0 || p >= 2 * n || q >= 2 * n || p == q || d.pair[p] != 0xff || d.pair[q] != 0xff)
      throw InvalidArgument("bad chord list for TL diagram");
    d.pair[p] = std::uint8_t(q);
    d.pair[q] = std::uint8_t(p);
  }
  if (!d.is_planar()) throw InvalidArgument("TL diagram is not planar");
  return d;
}

namespace {
// Position of a point when walking the boundary: top left to right, then bottom right to left.
int circ(int n, int p) { return p < n ? p : 3 * n - 1 - p; }
}  // namespace

bool TLDiagram::is_planar() const {
  if (int(pair.size()) != 2 * n) return false;
  std::vector<int> order(2 * n);
  for (int p = 0; p < 2 * n; ++p) order[circ(n, p)] = p;
  std::vector<int> stack;
  for (int q = 0; q < 2 * n; ++q) {
    int p = order[q];
    if (pair[p] >= 2 * n || pair[pair[p]] != p || pair[p] == p) return false;
    if (circ(n, pair[p]) > q) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != pair[p]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y) {
  if (x.n != y.n) throw InvalidArgument("composing TL diagrams of different size");
  const int n = x.n;
  TLDiagram out{n, std::vector<std::uint8_t>(2 * n)};
  std::vector<char> seen(n, 0);  // middle row: x's bottom j glued to y's top j
  // Start on an outer point (x top if upper, else y bottom) and follow chords
  // through the middle row until the walk leaves on the outer boundary again.
  auto walk = [&](bool upper, int p) {
    for (;;) {
      int q = upper ? x.pair[p] : y.pair[p];
      if (upper ? q < n : q >= n) return q;
      int mid = upper ? q - n : q;
      seen[mid] = 1;
      upper = !upper;
      p = upper ? n + mid : mid;
    }
  };
  for (int t = 0; t < n; ++t) out.pair[t] = std::uint8_t(walk(true, t));
  for (int b = n; b < 2 * n; ++b) out.pair[b] = std::uint8_t(walk(false, b));
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (seen[m]) continue;
    ++loops;
    int cur = m;
    bool in_x = true;
    do {
      seen[cur] = 1;
      cur = in_x ? x.pair[n + cur] - n : y.pair[cur];
      in_x = !in_x;
    } while (!(cur == m && in_x));
  }
  return {std::move(out), loops};
}

int TLDiagram::closure_loops() const {
  std::vector<int> parent(2 * n);
  for (int p = 0; p < 2 * n; ++p) parent[p] = p;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int p = 0; p < 2 * n; ++p) join(p, pair[p]);
  for (int j = 0; j < n; ++j) join(j, n + j);
  int loops = 0;
  for (int p = 0; p < 2 * n; ++p) loops += find(p) == p;
  return loops;
}

TLDiagram TLDiagram::widened(int k) const {
  int m = n + k;
  TLDiagram d{m, std::vector<std::uint8_t>(2 * m)};
  auto map = [&](int p) { return p < n ? p : p - n + m; };
  for (int p = 0; p < 2 * n; ++p) d.pair[map(p)] = std::uint8_t(map(pair[p]));
  for (int j = n; j < m; ++j) {
    d.pair[j] = std::uint8_t(m + j);
    d.pair[m + j] = std::uint8_t(j);
  }
  return d;
}

std::string TLDiagram::str() const {
  std::ostringstream os;
  for (int p = 0; p < 2 * n; ++p)
    if (pair[p] > p) os << '(' << p << ',' << int(pair[p]) << ')';
  return os.str();
}

std::vector<TLDiagram> tl_enumerate(int n) {
  if (n < 1 || n > 12) throw BoundExceeded("tl_enumerate supports 1 <= n <= 12");
  std::vector<TLDiagram> out;
  std::vector<int> order(2 * n);
  for (int p = 0; p < 2 * n; ++p) order[circ(n, p)] = p;
  std::vector<int> match(2 * n, -1);
  // Non-crossing matchings of the boundary circle, position q matched to q+2k+1.
  std::function<void(int)> rec = [&](int q) {
    while (q < 2 * n && match[q] >= 0) ++q;
    if (q == 2 * n) {
      TLDiagram d{n, std::vector<std::uint8_t>(2 * n)};
      for (int s = 0; s < 2 * n; ++s) d.pair[order[s]] = std::uint8_t(order[match[s]]);
      out.push_back(std::move(d));
      return;
    }
    for (int r = q + 1; r < 2 * n; r += 2) {
      if (match[r] >= 0) break;
      match[q] = r;
      match[r] = q;
      rec(q + 1);
      match[q] = match[r] = -1;
    }
  };
  rec(0);
  return out;
}

TLSymbolic tl_identity(int n) { return TLSymbolic::identity(n, loop_value(), LaurentPoly(1)); }

TLSymbolic tl_generator(int n, int i) {
  TLSymbolic e(n, loop_value());
  e.add(TLDiagram::cupcap(n, i), LaurentPoly(1));
  return e;
}

TLNumeric tl_identity(int n, Complex A) { return TLNumeric::identity(n, loop_value_at(A), Complex(1.0)); }

TLNumeric tl_generator(int n, int i, Complex A) {
  TLNumeric e(n, loop_value_at(A));
  e.add(TLDiagram::cupcap(n, i), Complex(1.0));
  return e;
}

TLNumeric jones_wenzl(int n, Complex A) {
  if (n < 1) throw InvalidArgument("jones_wenzl needs n >= 1");
  TLNumeric p = tl_identity(1, A);
  for (int k = 1; k < n; ++k) {
    Complex dk = loop_chebyshev(k, A), dk1 = loop_chebyshev(k - 1, A);
    if (std::abs(dk) < 1e-12)
      throw NumericError("Jones-Wenzl recursion: quantum integer [" + std::to_string(k + 1) +
                         "] vanishes (k = " + std::to_string(k + 1) + ")");
    TLNumeric q = p.widened(1);
    TLNumeric u = tl_generator(k + 1, k, A);
    p = q - (dk1 / dk) * (q * u * q);
  }
  return p;
}

double max_abs(const TLNumeric& x) {
  double m = 0;
  for (const auto& [d, c] : x.terms()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace knotq
