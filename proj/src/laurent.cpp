#include "knotq/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "knotq/errors.hpp"

namespace knotq {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms t) {
  LaurentPoly p;
  for (auto& [e, c] : t) p.add_term(e, c);
  return p;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = 1, base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Complex LaurentPoly::eval(Complex a) const {
  if (a == Complex(0.0)) throw InvalidArgument("lp_eval: evaluation point A = 0");
  if (terms_.empty()) return 0.0;
  // Horner on the shifted polynomial A^-min * p, highest exponent first.
  Complex acc = 0.0;
  int prev = max_exp();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; prev > it->first; --prev) acc *= a;
    acc += it->second.convert_to<double>();
  }
  for (; prev > min_exp(); --prev) acc *= a;
  return acc * std::pow(a, min_exp());
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'A';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

// Replaces the UTF-8 minus sign with '-' and drops whitespace.
std::string normalise(const std::string& s, std::vector<long>& origin) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      origin.push_back(long(i));
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
      out += s[i];
      origin.push_back(long(i));
    }
  }
  origin.push_back(long(s.size()));
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::vector<long> origin;
  const std::string s = normalise(text, origin);
  size_t i = 0;
  auto fail = [&](const char* msg) -> ParseError { return ParseError(msg, origin[i]); };
  auto digits = [&]() {
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::string d = s.substr(i, j - i);
    i = j;
    return d;
  };
  if (s.empty()) throw ParseError("empty polynomial", 0);
  LaurentPoly p;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    BigInt c = 1;
    bool have_coeff = false;
    std::string d = digits();
    if (!d.empty()) {
      c = BigInt(d);
      have_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int e = 0;
    if (i < s.size() && s[i] == 'A') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        std::string ed = digits();
        if (ed.empty()) throw fail("expected exponent");
        e = esign * std::stoi(ed);
      }
    } else if (!have_coeff) {
      throw fail("expected coefficient or 'A'");
    }
    p.add_term(e, sign * c);
  }
  return p;
}

LaurentPoly loop_value() { return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace knotq
