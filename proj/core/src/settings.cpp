#include "schlicht/settings.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace schlicht {

NumericSettings settings_from_environment() {
  NumericSettings settings;
  if (const char* raw = std::getenv("SCHLICHT_SCOPE_TOL")) {
    try {
      std::size_t used = 0;
      const double tol = std::stod(raw, &used);
      if (used == std::string(raw).size() && std::isfinite(tol) && tol > 0.0) settings.eval_tol = tol;
    } catch (const std::exception&) {
      // unparsable values keep the default
    }
  }
  return settings;
}

}  // namespace schlicht
