#include "knotq/lof.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "knotq/errors.hpp"

namespace knotq {

namespace {

std::size_t count_forest(const std::vector<Mark>& f) {
  std::size_t n = f.size();
  for (const Mark& m : f) n += count_forest(m.inside);
  return n;
}

std::size_t depth_forest(const std::vector<Mark>& f) {
  std::size_t d = 0;
  for (const Mark& m : f) d = std::max(d, 1 + depth_forest(m.inside));
  return d;
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  // Reads marks until end of input or a '>' (left unconsumed).
  std::vector<Mark> forest(std::size_t depth) {
    std::vector<Mark> out;
    for (;;) {
      skip_ws();
      if (pos >= text.size() || text[pos] == '>') return out;
      if (text[pos] != '<') {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'",
                         static_cast<long>(pos));
      }
      if (depth + 1 > kMaxMarkDepth) throw BoundExceeded("mark nesting deeper than 4096");
      std::size_t open = pos++;
      Mark m;
      m.inside = forest(depth + 1);
      if (pos >= text.size()) throw ParseError("unclosed mark", static_cast<long>(open));
      ++pos;  // '>'
      out.push_back(std::move(m));
    }
  }
};

void render_forest(const std::vector<Mark>& f, std::string& out) {
  for (const Mark& m : f) {
    out += '<';
    render_forest(m.inside, out);
    out += '>';
  }
}

// Path of indices to the leftmost deepest mark.
void find_deepest(const std::vector<Mark>& f, std::vector<std::size_t>& path,
                  std::vector<std::size_t>& best) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    path.push_back(j);
    if (path.size() > best.size()) best = path;
    find_deepest(f[j].inside, path, best);
    path.pop_back();
  }
}

bool step_deepest(MarkExpr& e) {
  std::vector<std::size_t> path, best;
  find_deepest(e.marks, path, best);
  if (best.empty()) return false;

  std::vector<Mark>* grand = nullptr;
  std::vector<Mark>* forest = &e.marks;
  for (std::size_t k = 0; k + 1 < best.size(); ++k) {
    grand = forest;
    forest = &(*forest)[best[k]].inside;
  }
  // A deepest mark is empty and so are all of its siblings.
  if (forest->size() >= 2) {
    forest->erase(forest->begin() + static_cast<long>(best.back()));  // calling
    return true;
  }
  if (grand == nullptr) return false;  // just <>
  grand->erase(grand->begin() + static_cast<long>(best[best.size() - 2]));  // crossing
  return true;
}

bool step_outermost(std::vector<Mark>& f) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    Mark& m = f[j];
    if (m.inside.size() == 1 && m.inside[0].inside.empty()) {
      f.erase(f.begin() + static_cast<long>(j));
      return true;
    }
    if (m.inside.empty() && j + 1 < f.size() && f[j + 1].inside.empty()) {
      f.erase(f.begin() + static_cast<long>(j) + 1);
      return true;
    }
    if (step_outermost(m.inside)) return true;
  }
  return false;
}

bool terminal(const MarkExpr& e) {
  return e.marks.empty() || (e.marks.size() == 1 && e.marks[0].inside.empty());
}

bool bool_forest(const std::vector<Mark>& f) {
  bool any = false;
  for (const Mark& m : f) any = any || !bool_forest(m.inside);
  return any;
}

}  // namespace

std::size_t MarkExpr::count() const { return count_forest(marks); }
std::size_t MarkExpr::depth() const { return depth_forest(marks); }

MarkExpr lof_parse(std::string_view text) {
  Parser p{text};
  MarkExpr e;
  e.marks = p.forest(0);
  if (p.pos < text.size()) throw ParseError("unmatched '>'", static_cast<long>(p.pos));
  return e;
}

std::string lof_render(const MarkExpr& e) {
  std::string out;
  render_forest(e.marks, out);
  return out;
}

const char* lof_value_name(LofValue v) { return v == LofValue::Marked ? "marked" : "unmarked"; }

bool lof_step(MarkExpr& e, LofStrategy s) {
  if (terminal(e)) return false;
  if (s == LofStrategy::DeepestFirst) return step_deepest(e);
  return step_outermost(e.marks);
}

LofValue lof_reduce(const MarkExpr& e, LofStrategy s) {
  MarkExpr w = e;
  while (lof_step(w, s)) {
  }
  return w.marks.empty() ? LofValue::Unmarked : LofValue::Marked;
}

std::vector<std::string> lof_reduce_trace(const MarkExpr& e, LofStrategy s) {
  MarkExpr w = e;
  std::vector<std::string> out{lof_render(w)};
  while (lof_step(w, s)) out.push_back(lof_render(w));
  return out;
}

LofValue lof_boolean_oracle(const MarkExpr& e) {
  return bool_forest(e.marks) ? LofValue::Marked : LofValue::Unmarked;
}

std::vector<MarkExpr> lof_enumerate(std::size_t n) {
  // forests[k] = all forests with k marks; first mark holds j, the rest k-1-j.
  std::vector<std::vector<std::vector<Mark>>> forests(n + 1);
  forests[0].push_back({});
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& in : forests[j]) {
        for (const auto& rest : forests[k - 1 - j]) {
          std::vector<Mark> f;
          f.reserve(rest.size() + 1);
          f.push_back(Mark{in});
          f.insert(f.end(), rest.begin(), rest.end());
          forests[k].push_back(std::move(f));
        }
      }
    }
  }
  std::vector<MarkExpr> out;
  out.reserve(forests[n].size());
  for (auto& f : forests[n]) out.push_back(MarkExpr{std::move(f)});
  return out;
}

// ([p,q] + [r,s]eta)([p',q'] + [r',s']eta)
//   = [pp' + rs', qq' + sr'] + [pr' + rq', qs' + sp']eta
Iterant iterant_mul(const Iterant& x, const Iterant& y) {
  return {x.p * y.p + x.r * y.s, x.q * y.q + x.s * y.r, x.p * y.r + x.r * y.q,
          x.q * y.s + x.s * y.p};
}

Iterant operator*(const Iterant& x, const Iterant& y) { return iterant_mul(x, y); }
Iterant operator*(Complex c, const Iterant& x) { return {c * x.p, c * x.q, c * x.r, c * x.s}; }
Iterant operator+(const Iterant& x, const Iterant& y) {
  return {x.p + y.p, x.q + y.q, x.r + y.r, x.s + y.s};
}
Iterant operator-(const Iterant& x, const Iterant& y) {
  return {x.p - y.p, x.q - y.q, x.r - y.r, x.s - y.s};
}
Iterant operator-(const Iterant& x) { return {-x.p, -x.q, -x.r, -x.s}; }

Iterant iterant_dagger(const Iterant& x) {
  return {std::conj(x.p), std::conj(x.q), std::conj(x.s), std::conj(x.r)};
}

double iterant_dist(const Iterant& x, const Iterant& y) {
  return std::max({std::abs(x.p - y.p), std::abs(x.q - y.q), std::abs(x.r - y.r),
                   std::abs(x.s - y.s)});
}

ComplexMatrix iterant_matrix(const Iterant& x) { return mat_from_rows(2, 2, {x.p, x.r, x.s, x.q}); }

Iterant iterant_from_matrix(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw InvalidArgument("iterant needs a 2x2 matrix");
  return {m(0, 0), m(1, 1), m(0, 1), m(1, 0)};
}

Iterant iterant_e() { return Iterant::diag(1, -1); }
Iterant iterant_i() { return iterant_e() * Iterant::eta(); }

IterantQuaternions iterant_quaternions() {
  const Complex i(0, 1);
  IterantQuaternions q;
  q.a = iterant_e();
  q.b = Iterant::eta();
  q.c = i * (q.a * q.b);
  q.I = q.b * q.a;
  q.J = q.c * q.b;
  q.K = q.a * q.c;
  return q;
}

namespace {
const ComplexMatrix& alpha_m() {
  static const ComplexMatrix a = mat_from_rows(2, 2, {-1, 0, 0, 1});
  return a;
}
const ComplexMatrix& beta_m() {
  static const ComplexMatrix b = mat_from_rows(2, 2, {0, 1, 1, 0});
  return b;
}
}  // namespace

DiracCheck dirac_nilpotent(double E, double p, double m) {
  const ComplexMatrix& a = alpha_m();
  const ComplexMatrix& b = beta_m();
  DiracCheck out;
  out.U = b * a * E + b * p + a * m;
  ComplexMatrix u2 = out.U * out.U;
  out.identity_residual = (u2 - (-E * E + p * p + m * m) * mat_identity(2)).norm();
  out.u_squared_norm = u2.norm();
  return out;
}

ComplexMatrix rowland_u(double E, double p, double m) {
  const Complex i(0, 1);
  const ComplexMatrix& e = alpha_m();
  const ComplexMatrix& eta = beta_m();
  return -i * E * eta + i * p * (e * eta) + m * e;
}

}  // namespace knotq
