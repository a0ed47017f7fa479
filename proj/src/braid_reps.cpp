#include "knotq/braid_reps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "knotq/qnumbers.hpp"

namespace knotq {

double Quaternion::norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }

Quaternion Quaternion::inverse() const {
  const double n2 = a * a + b * b + c * c + d * d;
  if (n2 == 0.0) throw NumericError("inverse of the zero quaternion");
  return (1.0 / n2) * conj();
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

double quat_dist(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                   std::abs(p.d - q.d)});
}

ComplexMatrix quat_to_matrix(const Quaternion& q) {
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  m << q.a + i * q.b, q.c + i * q.d, -q.c + i * q.d, q.a - i * q.b;
  return m;
}

namespace {

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double braid_dot(double theta) {
  const double a = std::cos(theta / 2), b = std::sin(theta / 2);
  if (std::abs(b) < 1e-12) throw InvalidArgument("su2 braid pair: sin(theta/2) = 0");
  return (a * a - b * b) / (2 * b * b);
}

void check_unit(const Vec3& u, const char* name) {
  if (std::abs(dot(u, u) - 1.0) > 1e-10)
    throw InvalidArgument(std::string("su2 braid pair: ") + name + " is not a unit vector");
}

}  // namespace

std::pair<Quaternion, Quaternion> su2_braid_pair(double theta, const Vec3& u, const Vec3& v) {
  check_unit(u, "u");
  check_unit(v, "v");
  const double want = braid_dot(theta);
  if (std::abs(dot(u, v) - want) > 1e-10)
    throw InvalidArgument("su2 braid pair: u.v = " + std::to_string(dot(u, v)) +
                          ", braid relation needs " + std::to_string(want));
  const double a = std::cos(theta / 2), b = std::sin(theta / 2);
  return {{a, b * u[0], b * u[1], b * u[2]}, {a, b * v[0], b * v[1], b * v[2]}};
}

Vec3 su2_partner(double theta, const Vec3& u) {
  check_unit(u, "u");
  const double c = braid_dot(theta);
  if (std::abs(c) > 1.0)
    throw InvalidArgument("su2 braid pair: no unit v with u.v = " + std::to_string(c));
  Vec3 axis = std::abs(u[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 w = cross(u, axis);
  const double wn = std::sqrt(dot(w, w));
  const double s = std::sqrt(1.0 - c * c);
  Vec3 v;
  for (int k = 0; k < 3; ++k) v[k] = c * u[k] + s * w[k] / wn;
  return v;
}

RepCheck check_rep(const RepMatrixSet& rep) {
  RepCheck out;
  const auto& g = rep.gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.unitarity_error = std::max(out.unitarity_error, unitarity_error(g[i]));
    if (i < rep.inverse_gens.size()) {
      const ComplexMatrix id = ComplexMatrix::Identity(g[i].rows(), g[i].cols());
      out.inverse_error = std::max(out.inverse_error, mat_dist(g[i] * rep.inverse_gens[i], id));
    }
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1)
        out.braid_error =
            std::max(out.braid_error, mat_dist(g[i] * g[j] * g[i], g[j] * g[i] * g[j]));
      else
        out.commute_error = std::max(out.commute_error, mat_dist(g[i] * g[j], g[j] * g[i]));
    }
  }
  return out;
}

ComplexMatrix rep_image(const RepMatrixSet& rep, const BraidWord& b) {
  if (b.strands != rep.strands)
    throw InvalidArgument("braid on " + std::to_string(b.strands) + " strands, rep on " +
                          std::to_string(rep.strands));
  const auto dim = rep.gens.empty() ? 1 : rep.gens[0].rows();
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  for (int l : b.letters) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    if (l < 0 && rep.inverse_gens.size() <= k)
      throw InvalidArgument("representation has no inverse images");
    m = m * (l > 0 ? rep.gens[k] : rep.inverse_gens[k]);
  }
  return m;
}

bool tl_two_by_two_admissible(double theta) {
  return std::abs(2.0 * std::cos(2.0 * theta)) >= 1.0 - 1e-12;
}

std::pair<ComplexMatrix, ComplexMatrix> tl_two_by_two_projections(double theta) {
  const double d = -2.0 * std::cos(2.0 * theta);
  if (std::abs(d) < 1e-12) throw InvalidArgument("tl 2x2: d = 0 at this angle");
  const Complex s = std::sqrt(Complex(1.0 - 1.0 / (d * d)));
  ComplexMatrix u1(2, 2), u2(2, 2);
  u1 << d, 0, 0, 0;
  u2 << 1.0 / d, s, s, d - 1.0 / d;
  return {u1, u2};
}

RepMatrixSet tl_two_by_two_unchecked(double theta) {
  auto [u1, u2] = tl_two_by_two_projections(theta);
  const Complex A = std::polar(1.0, theta);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  RepMatrixSet rep{3, {}, {}, "tl_two_by_two"};
  for (const ComplexMatrix& u : {u1, u2}) {
    rep.gens.push_back(A * id + (1.0 / A) * u);
    rep.inverse_gens.push_back((1.0 / A) * id + A * u);
  }
  return rep;
}

RepMatrixSet tl_two_by_two(double theta) {
  if (!tl_two_by_two_admissible(theta))
    throw InvalidArgument("tl 2x2: theta = " + std::to_string(theta) +
                          " is outside the unitary ranges (|2 cos 2theta| < 1)");
  return tl_two_by_two_unchecked(theta);
}

std::pair<ComplexMatrix, ComplexMatrix> fibonacci_local() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double tau = 1.0 / phi;
  ComplexMatrix F(2, 2), R(2, 2);
  F << tau, std::sqrt(tau), std::sqrt(tau), -tau;
  R << std::polar(1.0, 4 * M_PI / 5), 0, 0, -std::polar(1.0, 2 * M_PI / 5);
  return {F, R};
}

RepMatrixSet fibonacci_fr_rep() {
  auto [F, R] = fibonacci_local();
  RepMatrixSet rep{3, {R, F * R * F}, {}, "fibonacci_fr"};
  for (const auto& g : rep.gens) rep.inverse_gens.push_back(g.adjoint());
  return rep;
}

std::vector<FibState> fib_basis(int n) {
  if (n < 0 || n > kMaxFibLength)
    throw BoundExceeded("fib_basis: length " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxFibLength));
  std::vector<FibState> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<FibState> next;
    next.reserve(out.size() * 2);
    for (const auto& s : out) {
      if (s.empty() || s.back() != '*') next.push_back(s + '*');
      next.push_back(s + 'P');
    }
    out = std::move(next);
  }
  // Extending in place keeps the list sorted with '*' < 'P'.
  return out;
}

FibParams fib_params() {
  const double delta = (1.0 + std::sqrt(5.0)) / 2.0;
  const double a = 1.0 / delta;
  return {delta, a, std::sqrt(1.0 - a * a)};
}

ComplexMatrix fib_tl_generator(int n, int i, FibEndRule rule) {
  if (n < 1) throw InvalidArgument("fib_tl_generator: need n >= 1");
  if (i < 1 || i > n + 1)
    throw InvalidArgument("fib_tl_generator: index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n + 1));
  const auto basis = fib_basis(n);
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
  const auto [delta, a, b] = fib_params();

  const auto dim = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix U = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    // pad[k+1] = x_k for k = -1 .. n+1
    const std::string pad = "*P" + basis[col] + "P";
    const std::string triple = pad.substr(i - 1, 3);
    auto flipped = [&](char c) {
      std::string s = basis[col];
      s[i - 2] = c;  // the middle x_{i-1}
      return index.at(s);
    };
    if (triple == "*P*") {
      U(col, col) += delta;
    } else if (triple == "P*P") {
      if (rule == FibEndRule::Verbatim && i == n + 1 && n >= 2) continue;
      U(col, col) += a;
      U(flipped('P'), col) += b;
    } else if (triple == "PPP") {
      U(col, col) += delta * b * b;
      U(flipped('*'), col) += b;
    }
    // *PP and PP* go to zero
  }
  return U;
}

RepMatrixSet fib_braid_rep(int n) {
  const Complex A = fibonacci_A();
  RepMatrixSet rep{n + 2, {}, {}, "fibonacci_sequences"};
  for (int i = 1; i <= n + 1; ++i) {
    const ComplexMatrix U = fib_tl_generator(n, i);
    const ComplexMatrix id = ComplexMatrix::Identity(U.rows(), U.cols());
    rep.gens.push_back(A * id + (1.0 / A) * U);
    rep.inverse_gens.push_back((1.0 / A) * id + A * U);
  }
  return rep;
}

namespace {

// SU(2) element [[al, be], [-conj(be), conj(al)]].
struct Su2 {
  Complex al, be;
};

Su2 to_su2(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw InvalidArgument("density_smoke needs a 2-dim rep");
  const Complex root = std::sqrt(m.determinant());
  if (std::abs(root) < 1e-12) throw NumericError("density_smoke: singular generator");
  return {m(0, 0) / root, m(0, 1) / root};
}

Su2 mul(const Su2& x, const Su2& y) {
  return {x.al * y.al - x.be * std::conj(y.be), x.al * y.be + x.be * std::conj(y.al)};
}

double dist(const Su2& x, const Su2& y) {
  const double overlap = std::abs((std::conj(x.al) * y.al + std::conj(x.be) * y.be).real());
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

struct Key {
  std::array<long, 4> v;
  bool operator==(const Key&) const = default;
};
struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 0;
    for (long x : k.v) h = h * 1000003u ^ std::hash<long>()(x);
    return h;
  }
};

// Grid cell of the element up to sign (U and -U are the same rotation).
Key key_of(const Su2& u) {
  std::array<double, 4> c{u.al.real(), u.al.imag(), u.be.real(), u.be.imag()};
  for (double x : c) {
    if (std::abs(x) < 1e-9) continue;
    if (x < 0)
      for (double& y : c) y = -y;
    break;
  }
  Key k;
  for (int j = 0; j < 4; ++j) k.v[j] = std::lround(c[j] * 1e3);
  return k;
}

}  // namespace

double projective_dist(const ComplexMatrix& u, const ComplexMatrix& v) {
  return dist(to_su2(u), to_su2(v));
}

DensityReport density_smoke(const RepMatrixSet& rep, int depth, int targets, std::uint64_t seed) {
  if (depth < 0) throw InvalidArgument("density_smoke: negative depth");
  std::vector<Su2> letters;
  for (const auto& g : rep.gens) letters.push_back(to_su2(g));
  for (const auto& g : rep.inverse_gens) letters.push_back(to_su2(g));

  std::vector<Su2> all{{1.0, 0.0}};
  std::unordered_set<Key, KeyHash> seen{key_of(all[0])};
  std::size_t level_begin = 0;
  for (int len = 1; len <= depth; ++len) {
    const std::size_t level_end = all.size();
    for (std::size_t w = level_begin; w < level_end; ++w)
      for (const Su2& l : letters) {
        Su2 next = mul(all[w], l);
        if (seen.insert(key_of(next)).second) all.push_back(next);
      }
    level_begin = level_end;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  DensityReport out;
  out.elements = all.size();
  for (int t = 0; t < targets; ++t) {
    double q[4], n2 = 0;
    for (double& x : q) {
      x = normal(rng);
      n2 += x * x;
    }
    const double s = 1.0 / std::sqrt(n2);
    const Su2 target{{q[0] * s, q[1] * s}, {q[2] * s, q[3] * s}};
    double best = 1.0;
    for (const Su2& u : all) best = std::min(best, dist(u, target));
    out.radius = std::max(out.radius, best);
  }
  return out;
}

}  // namespace knotq
