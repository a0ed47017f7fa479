#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "knotq/bracket.hpp"
#include "knotq/braid_reps.hpp"
#include "knotq/clifford.hpp"
#include "knotq/coloring.hpp"
#include "knotq/errors.hpp"
#include "knotq/gates.hpp"
#include "knotq/json_io.hpp"
#include "knotq/lof.hpp"
#include "knotq/qnumbers.hpp"
#include "knotq/quantum_sim.hpp"
#include "knotq/tl_algebra.hpp"

namespace knotq::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string braid, pd;
  std::optional<double> theta;
  std::optional<int> level;
  std::optional<int> color;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool json = false;

  std::string target = "all";  // verify
  std::string action, expr;    // lof
  double E = 0, p = 0, m = 0;  // lof dirac
  std::string state;           // chsh
  int upto = 10;               // tables
};

struct Report {
  json j = json::object();
  std::vector<std::string> lines;
  int code = 0;
};

// Everything printed goes through these: 12 significant digits, and values
// below 1e-12 in modulus shown as 0.
double chop(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", chop(x));
  return buf;
}

double rnum(double x) { return std::strtod(num(x).c_str(), nullptr); }

std::string cnum(Complex z) {
  double re = chop(z.real()), im = chop(z.imag());
  if (im == 0) return num(re);
  if (re == 0) return num(im) + "i";
  return num(re) + (im < 0 ? " - " : " + ") + num(std::abs(im)) + "i";
}

json jnum(Complex z) { return {{"re", rnum(z.real())}, {"im", rnum(z.imag())}}; }

json jmatrix(const ComplexMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < a.cols(); ++k) row.push_back(jnum(a(i, k)));
    rows.push_back(row);
  }
  return rows;
}

void matrix_lines(Report& r, const std::string& name, const ComplexMatrix& a) {
  r.lines.push_back(name + " =");
  for (int i = 0; i < a.rows(); ++i) {
    std::string line = "  [";
    for (int k = 0; k < a.cols(); ++k) line += (k ? ", " : "") + cnum(a(i, k));
    r.lines.push_back(line + "]");
  }
}

std::string tol_str(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", t);
  return t == 0 ? "0 (exact)" : buf;
}

void check_line(Report& r, const std::string& name, bool ok, double err, double tol) {
  r.lines.push_back(std::string(ok ? "pass" : "FAIL") + "  " + name + "  (error " + num(err) +
                    ", tol " + tol_str(tol) + ")");
  r.j["checks"].push_back({{"name", name}, {"pass", ok}, {"error", rnum(err)}, {"tol", tol}});
  if (!ok) r.code = 1;
}

std::string read_pd_arg(const std::string& v) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(v, ec)) {
    std::ifstream in(v);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return v;
}

struct Input {
  bool from_braid = false;
  BraidWord braid;
  PDCode pd;
  json echo;
};

Input load_input(const Options& o, bool braid_required = false) {
  if (o.braid.empty() == o.pd.empty()) throw UsageError("give exactly one of --braid or --pd");
  Input in;
  if (!o.braid.empty()) {
    in.from_braid = true;
    in.braid = parse_braid(o.braid);
    in.pd = trace_closure(in.braid);
    in.echo = {{"braid", to_string(in.braid)}};
  } else {
    if (braid_required) throw UsageError("this command needs --braid");
    in.pd = parse_pd(read_pd_arg(o.pd));
    in.echo = {{"pd", to_string(in.pd)}};
  }
  return in;
}

std::optional<Complex> chosen_A(const Options& o) {
  if (o.theta && o.level) throw UsageError("--theta and --level are exclusive");
  if (o.theta) return std::polar(1.0, *o.theta);
  if (o.level) {
    if (*o.level < 2) throw UsageError("--level must be at least 2");
    return root_of_unity_A(*o.level);
  }
  return std::nullopt;
}

TrialBudget budget(const Options& o) {
  TrialBudget b;
  b.trials = o.trials;
  b.seed = o.seed;
  b.threads = o.threads;
  return b;
}

// f in A rewritten in t = A^-4; exponents of t may be half-integers.
std::string jones_in_t(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
    int halves = -it->first / 2;  // 2 * (exponent of t)
    BigInt c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string power;
    if (halves != 0) {
      power = "t";
      if (halves % 2 == 0) {
        if (halves != 2) power += "^" + std::to_string(halves / 2);
      } else {
        power += "^(" + std::to_string(halves) + "/2)";
      }
    }
    if (power.empty() || c != 1) out += c.str();
    out += power;
  }
  return out;
}

// -------------------------------------------------------------- verbs

Report do_bracket(const Options& o) {
  Report r;
  Input in = load_input(o);
  r.j["input"] = in.echo;
  std::optional<Complex> A = chosen_A(o);
  if (o.color) {
    if (!A) throw UsageError("--color needs --level or --theta");
    Complex v = colored_bracket(in.pd, *o.color, *A);
    r.j["color"] = *o.color;
    r.j["A"] = jnum(*A);
    r.j["value"] = jnum(v);
    r.lines.push_back("<K>_" + std::to_string(*o.color) + " = " + cnum(v) + "  at A = " + cnum(*A));
    return r;
  }
  LaurentPoly b = bracket_state_sum(in.pd, static_cast<int>(o.threads));
  r.j["bracket"] = to_json(b);
  r.j["text"] = b.str();
  r.lines.push_back(b.str());
  if (A) {
    Complex v = b.eval(*A);
    r.j["A"] = jnum(*A);
    r.j["value"] = jnum(v);
    r.lines.push_back("at A = " + cnum(*A) + ": " + cnum(v));
  }
  return r;
}

Report do_jones(const Options& o) {
  Report r;
  Input in = load_input(o);
  r.j["input"] = in.echo;
  LaurentPoly f = normalized_f(in.pd, static_cast<int>(o.threads));
  r.j["f"] = to_json(f);
  r.j["f_text"] = f.str();
  r.j["jones_t"] = jones_in_t(f);
  r.lines.push_back("f(A) = " + f.str());
  r.lines.push_back("V(t) = " + jones_in_t(f));
  if (o.theta) {
    Complex A = std::polar(1.0, *o.theta);
    Complex exact = bracket_state_sum(in.pd).eval(A);
    r.j["theta"] = *o.theta;
    r.j["bracket_at_A"] = jnum(exact);
    r.lines.push_back("<K> at A = e^{i " + num(*o.theta) + "}: " + cnum(exact));
    if (o.trials > 0) {
      if (!in.from_braid || in.braid.strands != 3)
        throw UsageError("the Hadamard-test estimate needs a 3-strand --braid");
      Jones3Estimate e = jones_3braid(in.braid, *o.theta, budget(o));
      r.j["estimate"] = {{"value", jnum(e.estimate)},
                         {"exact", jnum(e.exact)},
                         {"stderr", rnum(e.stderr)},
                         {"trials", o.trials},
                         {"seed", o.seed}};
      r.lines.push_back("Hadamard estimate: " + cnum(e.estimate) + "  (stderr " + num(e.stderr) +
                        ", " + std::to_string(o.trials) + " trials per basis vector)");
    }
  } else if (o.trials > 0) {
    throw UsageError("--trials needs --theta");
  }
  return r;
}

Report do_fib(const Options& o) {
  Report r;
  auto [F, R] = fibonacci_local();
  if (o.braid.empty()) {
    matrix_lines(r, "F", F);
    matrix_lines(r, "R", R);
    r.j["F"] = jmatrix(F);
    r.j["R"] = jmatrix(R);
    double f2 = mat_dist(F * F, mat_identity(2));
    RepCheck c = check_rep(fibonacci_fr_rep());
    r.lines.push_back("|F^2 - I| = " + num(f2));
    r.lines.push_back("3-strand rep: unitarity " + num(c.unitarity_error) + ", braid " +
                      num(c.braid_error));
    r.j["F2_error"] = rnum(f2);
    r.j["rep"] = {{"unitarity_error", rnum(c.unitarity_error)}, {"braid_error", rnum(c.braid_error)}};
    json dims = json::array();
    std::string line = "dim fib_basis(n), n = 1..12:";
    for (int n = 1; n <= 12; ++n) {
      dims.push_back(fib_basis(n).size());
      line += " " + std::to_string(fib_basis(n).size());
    }
    r.j["dims"] = dims;
    r.lines.push_back(line);
    return r;
  }
  BraidWord b = parse_braid(o.braid);
  if (b.strands < 3) throw UsageError("fib --braid needs at least 3 strands");
  RepMatrixSet rep = fib_braid_rep(b.strands - 2);
  ComplexMatrix U = rep_image(rep, b);
  Complex tr = mat_trace(U);
  r.j["input"] = {{"braid", to_string(b)}};
  r.j["dim"] = U.rows();
  r.j["trace"] = jnum(tr);
  r.j["unitarity_error"] = rnum(unitarity_error(U));
  r.lines.push_back("dimension " + std::to_string(U.rows()) + ", trace " + cnum(tr) +
                    ", unitarity error " + num(unitarity_error(U)));
  if (U.rows() <= 8) matrix_lines(r, "rho(b)", U);
  if (o.trials > 0) {
    TraceEstimate e = trace_estimate(U, budget(o));
    r.j["estimate"] = {{"value", jnum(e.value)},
                       {"stderr_re", rnum(e.stderr_re)},
                       {"stderr_im", rnum(e.stderr_im)},
                       {"trials", o.trials},
                       {"seed", o.seed}};
    r.lines.push_back("Hadamard trace estimate " + cnum(e.value) + "  (stderr " + num(e.stderr_re) +
                      " / " + num(e.stderr_im) + ")");
  }
  return r;
}

void verify_fibonacci(Report& r) {
  auto [F, R] = fibonacci_local();
  check_line(r, "fibonacci: F^2 = I", mat_dist(F * F, mat_identity(2)) <= 1e-14,
             mat_dist(F * F, mat_identity(2)), 1e-14);
  ComplexMatrix Rx = mat_from_rows(2, 2, {std::polar(1.0, 4 * M_PI / 5), 0, 0, -std::polar(1.0, 2 * M_PI / 5)});
  check_line(r, "fibonacci: R local phases", mat_dist(R, Rx) <= 1e-14, mat_dist(R, Rx), 1e-14);
  RepCheck c = check_rep(fibonacci_fr_rep());
  double e = std::max({c.unitarity_error, c.braid_error, c.inverse_error});
  check_line(r, "fibonacci: s1 -> R, s2 -> FRF", e <= 1e-12, e, 1e-12);
  for (int n = 1; n <= 6; ++n) {
    RepCheck cn = check_rep(fib_braid_rep(n));
    double en = std::max({cn.unitarity_error, cn.braid_error, cn.commute_error, cn.inverse_error});
    check_line(r, "fibonacci: sequence rep on " + std::to_string(n + 2) + " strands", en <= 1e-10, en, 1e-10);
  }
}

void verify_tl(Report& r) {
  bool all = true;
  for (int n = 2; n <= 6; ++n) {
    const LaurentPoly d = loop_value();
    for (int i = 1; i < n; ++i) {
      TLSymbolic u = tl_generator(n, i);
      all = all && (u * u == d * u);
      if (i + 1 < n) {
        TLSymbolic v = tl_generator(n, i + 1);
        all = all && (u * v * u == u) && (v * u * v == v);
      }
      for (int k = i + 2; k < n; ++k) {
        TLSymbolic w = tl_generator(n, k);
        all = all && (u * w == w * u);
      }
    }
  }
  check_line(r, "tl: relations for n <= 6, exact", all, all ? 0 : 1, 0);
}

void verify_majorana(Report& r) {
  double worst = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      ComplexMatrix t = conjugation_matrix(n, k);
      worst = std::max(worst, t.imag().cwiseAbs().maxCoeff());
      worst = std::max(worst, unitarity_error(t));
      if (k + 1 < n) {
        ComplexMatrix u = conjugation_matrix(n, k + 1);
        worst = std::max(worst, mat_dist(t * u * t, u * t * u));
      }
      for (int j = k + 2; j < n; ++j) {
        ComplexMatrix w = conjugation_matrix(n, j);
        worst = std::max(worst, mat_dist(t * w, w * t));
      }
    }
  }
  check_line(r, "majorana: T_k orthogonal and braided, n <= 8", worst <= 1e-12, worst, 1e-12);
}

void verify_ybe(Report& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 2 * M_PI);
  auto phase = [&] { return std::polar(1.0, u(rng)); };
  check_line(r, "ybe: R", ybe_check(bell_r()), ybe_residual(bell_r()), 1e-12);
  double wp = 0, wpp = 0, wbc = 0;
  for (int t = 0; t < 100; ++t) {
    wp = std::max(wp, ybe_residual(r_prime(phase(), phase(), phase(), phase())));
    wpp = std::max(wpp, ybe_residual(r_double_prime(phase(), phase(), phase(), phase())));
    Complex a = phase(), b = phase(), d = phase();
    wbc = std::max(wbc, ybe_residual(r_double_prime(a, b, b, d)));
  }
  check_line(r, "ybe: R' (100 random draws)", wp <= 1e-12, wp, 1e-12);
  check_line(r, "ybe: R'' (100 random draws)", wpp <= 1e-12, wpp, 1e-12);
  check_line(r, "ybe: R'' with b = c (100 random draws)", wbc <= 1e-12, wbc, 1e-12);
}

void verify_cnot(Report& r) {
  for (const FactorizationReport& f : {cnot_from_phase(), cnot_from_bell_r(), cnot_from_r0()})
    check_line(r, "cnot: " + f.name + "  " + f.expression, f.passed(1e-12), f.distance, 1e-12);
}

void verify_chsh(Report& r) {
  double s = 1 / std::sqrt(2.0);
  double v = chsh_delta({0, s, -s, 0}).direct;
  check_line(r, "chsh: singlet gives 2 sqrt 2", std::abs(v - 2 * std::sqrt(2.0)) <= 1e-10,
             std::abs(v - 2 * std::sqrt(2.0)), 1e-10);
}

Report do_verify(const Options& o) {
  Report r;
  r.j["target"] = o.target;
  r.j["checks"] = json::array();
  const std::string& t = o.target;
  bool any = false;
  auto want = [&](const char* name) {
    bool w = t == "all" || t == name;
    any = any || w;
    return w;
  };
  if (want("fibonacci")) verify_fibonacci(r);
  if (want("tl")) verify_tl(r);
  if (want("majorana")) verify_majorana(r);
  if (want("ybe")) verify_ybe(r, o.seed);
  if (want("cnot")) verify_cnot(r);
  if (want("chsh")) verify_chsh(r);
  if (!any) throw UsageError("unknown verify target '" + t + "'");
  r.j["pass"] = r.code == 0;
  r.lines.push_back(r.code == 0 ? "all checks pass" : "some checks FAILED");
  return r;
}

Report do_chsh(const Options& o) {
  Report r;
  TwoQubitState st;
  if (o.state.empty()) {
    double s = 1 / std::sqrt(2.0);
    st = {0, s, -s, 0};
  } else {
    std::vector<double> v;
    std::stringstream ss(o.state);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        v.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ParseError("bad amplitude '" + tok + "'");
      }
    }
    if (v.size() != 4) throw UsageError("--state takes four comma-separated real amplitudes");
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    if (n == 0) throw InvalidArgument("zero state");
    st = {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
  }
  ChshValue c = chsh_delta(st);
  r.j["state"] = {jnum(st.a), jnum(st.b), jnum(st.c), jnum(st.d)};
  r.j["direct"] = rnum(c.direct);
  r.j["formula"] = c.formula ? json(rnum(*c.formula)) : json(nullptr);
  r.j["entangled"] = is_entangled(st);
  r.j["violates_bound"] = std::abs(c.direct) > 2 + 1e-10;
  r.lines.push_back("Delta (direct)  = " + num(c.direct));
  if (c.formula) r.lines.push_back("Delta (formula) = " + num(*c.formula));
  r.lines.push_back(std::string("entangled: ") + (is_entangled(st) ? "yes" : "no") +
                    ", |Delta| > 2: " + (std::abs(c.direct) > 2 + 1e-10 ? "yes" : "no"));
  return r;
}

Report do_wrt(const Options& o) {
  Report r;
  if (!o.level) throw UsageError("wrt needs --level r (3, 4 or 5)");
  int lv = *o.level;
  if (o.braid.empty() == o.pd.empty()) throw UsageError("give exactly one of --braid or --pd");
  Complex total;
  json terms = json::array();
  Complex A = root_of_unity_A(lv);
  if (!o.braid.empty()) {
    BraidWord b = parse_braid(o.braid);
    total = wrt_invariant(b, lv);
    r.j["input"] = {{"plat", to_string(b)}};
    for (int a = 0; a <= lv - 2; ++a) {
      Complex ta = delta_n(a, A) * colored_plat_at_level(b, a, lv);
      terms.push_back(jnum(ta));
      r.lines.push_back("  a = " + std::to_string(a) + ": " + cnum(ta));
    }
  } else {
    PDCode d = parse_pd(read_pd_arg(o.pd));
    total = wrt_invariant(d, lv);
    r.j["input"] = {{"pd", to_string(d)}};
    for (int a = 0; a <= lv - 2; ++a) {
      Complex ta = delta_n(a, A) * colored_bracket(d, a, A);
      terms.push_back(jnum(ta));
      r.lines.push_back("  a = " + std::to_string(a) + ": " + cnum(ta));
    }
  }
  r.j["level"] = lv;
  r.j["terms"] = terms;
  r.j["value"] = jnum(total);
  r.lines.insert(r.lines.begin(), "WRT sum at r = " + std::to_string(lv) + ": " + cnum(total));
  return r;
}

Report do_lof(const Options& o) {
  Report r;
  r.j["action"] = o.action;
  if (o.action == "dirac" || o.action == "rowlands") {
    double k = -o.E * o.E + o.p * o.p + o.m * o.m;
    ComplexMatrix U;
    double ident = 0;
    if (o.action == "dirac") {
      DiracCheck d = dirac_nilpotent(o.E, o.p, o.m);
      U = d.U;
      ident = d.identity_residual;
    } else {
      U = rowland_u(o.E, o.p, o.m);
      ident = (U * U - k * mat_identity(2)).norm();
    }
    double sq = (U * U).norm();
    matrix_lines(r, "U", U);
    r.lines.push_back("|U^2 - (-E^2 + p^2 + m^2) I| = " + num(ident));
    r.lines.push_back("|U^2| = " + num(sq));
    r.j["U"] = jmatrix(U);
    r.j["E"] = o.E;
    r.j["p"] = o.p;
    r.j["m"] = o.m;
    r.j["identity_residual"] = rnum(ident);
    r.j["u_squared_norm"] = rnum(sq);
    return r;
  }
  MarkExpr e = lof_parse(o.expr);
  r.j["expr"] = lof_render(e);
  if (o.action == "reduce") {
    LofValue v = lof_reduce(e);
    r.j["value"] = lof_value_name(v);
    r.lines.push_back(lof_value_name(v));
  } else if (o.action == "trace") {
    std::vector<std::string> steps = lof_reduce_trace(e);
    r.j["steps"] = steps;
    r.j["value"] = lof_value_name(lof_reduce(e));
    for (const auto& s : steps) r.lines.push_back(s.empty() ? "(void)" : s);
  } else if (o.action == "bool") {
    LofValue v = lof_boolean_oracle(e);
    r.j["value"] = lof_value_name(v);
    r.lines.push_back(v == LofValue::Marked ? "T" : "F");
  } else {
    throw UsageError("lof action must be reduce, trace, bool, dirac or rowlands");
  }
  return r;
}

Report do_color(const Options& o) {
  Report r;
  Input in = load_input(o);
  int k = three_coloring_nullity(in.pd);
  std::uint64_t c = three_coloring_count(in.pd);
  bool nontrivial = k > 1;
  r.j["input"] = in.echo;
  r.j["nullity"] = k;
  r.j["count"] = c;
  r.j["nontrivial"] = nontrivial;
  r.lines.push_back("3-colorings: " + std::to_string(c) + " (3^" + std::to_string(k) + ")");
  r.lines.push_back(nontrivial ? "nontrivially colorable" : "only the constant colorings");
  return r;
}

Report do_tables(const Options& o) {
  Report r;
  int lv = o.level.value_or(5);
  if (lv < 2) throw UsageError("--level must be at least 2");
  if (o.upto < 0 || o.upto > 40) throw UsageError("--n must be in 0..40");
  Complex A = root_of_unity_A(lv);
  r.j["level"] = lv;
  r.j["rows"] = json::array();
  r.lines.push_back("A = e^{i pi/" + std::to_string(2 * lv) + "}, delta = " + cnum(loop_value_at(A)));
  r.lines.push_back(" n   [n]              Delta_n          fib dim");
  for (int n = 0; n <= o.upto; ++n) {
    Complex q = quantum_int(n, A), d = delta_n(n, A);
    long long dim = n >= 1 && n <= kMaxFibLength ? static_cast<long long>(fib_basis(n).size()) : 0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%2d   %-15s  %-15s  %s", n, cnum(q).c_str(), cnum(d).c_str(),
                  dim ? std::to_string(dim).c_str() : "-");
    r.lines.push_back(buf);
    json row = {{"n", n}, {"qint", jnum(q)}, {"delta_n", jnum(d)}};
    row["fib_dim"] = dim ? json(dim) : json(nullptr);
    r.j["rows"].push_back(row);
  }
  return r;
}

void add_input(CLI::App* s, Options& o) {
  s->add_option("--braid", o.braid, "braid word, e.g. \"B3: s1 s2^-1 s1\"");
  s->add_option("--pd", o.pd, "PD code text, or a file holding one");
}
void add_json(CLI::App* s, Options& o) { s->add_flag("--json", o.json, "machine-readable output"); }
void add_sampling(CLI::App* s, Options& o) {
  s->add_option("--trials", o.trials, "Hadamard-test trials per basis vector (0 = exact only)");
  s->add_option("--seed", o.seed, "random seed");
  s->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Knot invariants, braid representations and related checks", "knotq"};
  app.require_subcommand(1, 1);

  auto* bracket = app.add_subcommand("bracket", "bracket polynomial by state sum, or a colored bracket");
  add_input(bracket, o);
  add_json(bracket, o);
  bracket->add_option("--color", o.color, "colour a (needs --level or --theta)")->check(CLI::Range(0, 3));
  bracket->add_option("--theta", o.theta, "evaluate at A = e^{i theta}");
  bracket->add_option("--level", o.level, "evaluate at A = e^{i pi/2r}");
  bracket->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto* jones = app.add_subcommand("jones", "normalized bracket f and the Jones polynomial");
  add_input(jones, o);
  add_json(jones, o);
  add_sampling(jones, o);
  jones->add_option("--theta", o.theta, "also evaluate <K> at A = e^{i theta}");

  auto* fib = app.add_subcommand("fib", "Fibonacci model data, or the image of a braid");
  fib->add_option("--braid", o.braid, "braid on n + 2 strands");
  add_json(fib, o);
  add_sampling(fib, o);

  auto* verify = app.add_subcommand("verify", "run built-in consistency checks");
  verify->add_option("target", o.target, "fibonacci | tl | majorana | ybe | cnot | chsh | all");
  verify->add_option("--seed", o.seed, "seed for the random Yang-Baxter draws");
  add_json(verify, o);

  auto* chsh = app.add_subcommand("chsh", "CHSH quantity for a real two-qubit state");
  chsh->add_option("--state", o.state, "a,b,c,d amplitudes of |00>,|01>,|10>,|11> (default singlet)");
  add_json(chsh, o);

  auto* wrt = app.add_subcommand("wrt", "finite WRT sum at A = e^{i pi/2r}");
  wrt->add_option("--braid", o.braid, "braid whose plat closure is used");
  wrt->add_option("--pd", o.pd, "PD code text, or a file holding one");
  wrt->add_option("--level", o.level, "r in 3..5")->check(CLI::Range(3, 5));
  add_json(wrt, o);

  auto* lof = app.add_subcommand("lof", "mark calculus and the Dirac nilpotents");
  lof->add_option("action", o.action, "reduce | trace | bool | dirac | rowlands")->required();
  lof->add_option("expr", o.expr, "mark expression, e.g. \"<<>><>\"");
  lof->add_option("--E", o.E, "energy");
  lof->add_option("--p", o.p, "momentum");
  lof->add_option("--m", o.m, "mass");
  add_json(lof, o);

  auto* color = app.add_subcommand("color", "count 3-colorings");
  add_input(color, o);
  add_json(color, o);

  auto* tables = app.add_subcommand("tables", "quantum integers, loop values and Fibonacci dimensions");
  tables->add_option("--level", o.level, "r, with A = e^{i pi/2r} (default 5)");
  tables->add_option("--n", o.upto, "largest n (default 10)");
  add_json(tables, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "bracket") r = do_bracket(o);
    else if (verb == "jones") r = do_jones(o);
    else if (verb == "fib") r = do_fib(o);
    else if (verb == "verify") r = do_verify(o);
    else if (verb == "chsh") r = do_chsh(o);
    else if (verb == "wrt") r = do_wrt(o);
    else if (verb == "lof") r = do_lof(o);
    else if (verb == "color") r = do_color(o);
    else r = do_tables(o);

    if (o.json) {
      r.j["verb"] = verb;
      out << r.j.dump(2) << "\n";
    } else {
      for (const auto& line : r.lines) out << line << "\n";
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace knotq::cli
