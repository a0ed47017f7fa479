#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotq::cli {

// args excludes the program name. Exit codes: 0 success, 1 computation error
// or failed verification, 2 usage or input parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotq::cli
