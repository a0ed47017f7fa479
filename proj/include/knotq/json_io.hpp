#pragma once

#include <json.hpp>

#include "knotq/laurent.hpp"
#include "knotq/linkdata.hpp"

namespace knotq {

// {"5": -1, "-3": -1}. Coefficients outside the int64 range are decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const BraidWord& b);
nlohmann::json to_json(const PDCode& d);

}  // namespace knotq
