#pragma once

#include <string>
#include <string_view>

#include "schlicht/domain.hpp"

namespace schlicht {

// Domain documents:
//   {"kind": "slit_disk", "radial_slits": [{"angle": a, "inner": x}, ...],
//                         "curve_slits": [{"p": p, "p1": p1, "theta": t}, ...]}
//   {"kind": "half_plane", "alpha": a}
//   {"kind": "exterior", "excluded": {"disk": {"center": [re, im], "radius": r}}}
//   {"kind": "exterior", "excluded": {"polygon": [[re, im], ...]}}
// Curve slits are stored by their parameters; the polyline is rebuilt on load.

std::string domain_to_json(const Domain& domain);

/// Throws PreconditionError on malformed documents or out-of-range parameters.
Domain domain_from_json(std::string_view text, const NumericSettings& settings = {});

}  // namespace schlicht
