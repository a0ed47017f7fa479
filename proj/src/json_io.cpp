#include "knotq/json_io.hpp"

#include <limits>

#include "knotq/errors.hpp"

namespace knotq {

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  const BigInt lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : p.terms()) {
    if (c >= lo && c <= hi)
      j[std::to_string(e)] = c.convert_to<std::int64_t>();
    else
      j[std::to_string(e)] = c.str();
  }
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  LaurentPoly::Terms t;
  for (const auto& [key, val] : j.items()) {
    int e = 0;
    try {
      size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + key + "'");
    }
    BigInt c;
    if (val.is_number_integer())
      c = val.get<std::int64_t>();
    else if (val.is_string())
      c = BigInt(val.get<std::string>());
    else
      throw ParseError("coefficient for exponent " + key + " must be an integer or a decimal string");
    t[e] += c;
  }
  return LaurentPoly::from_terms(std::move(t));
}

nlohmann::json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json to_json(const BraidWord& b) { return {{"strands", b.strands}, {"letters", b.letters}}; }

nlohmann::json to_json(const PDCode& d) {
  nlohmann::json xs = nlohmann::json::array();
  for (const auto& x : d.crossings) xs.push_back({{"arcs", x.arcs}, {"sign", x.sign}});
  return {{"crossings", xs}, {"free_loops", d.free_loops}};
}

}  // namespace knotq
