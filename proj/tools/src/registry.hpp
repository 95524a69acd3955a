#pragma once

#include <string>
#include <vector>

#include "schlicht/functions.hpp"

namespace schlicht::cli {

struct FunctionArgs {
  double p = 0.5;
  Complex mu{0.0, 1.0 / 3.0};
};

/// Names accepted by --fn.
std::vector<std::string> function_names();

/// Throws PreconditionError for unknown names or out-of-range parameters.
FunctionHandle make_function(const std::string& name, const FunctionArgs& args);

}  // namespace schlicht::cli
