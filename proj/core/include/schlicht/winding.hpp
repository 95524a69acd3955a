#pragma once

#include "schlicht/functions.hpp"

namespace schlicht {

/// Number of solutions of f(z) = w0 inside |z - center| < radius, counted with
/// multiplicity, from the total argument increment of f - w0 around the circle.
///
/// The circle is subdivided adaptively until every step changes the argument
/// by less than pi/2 and is short against |f - w0| / |f'|. Throws DomainError when the contour is too close to a
/// declared pole, DomainError when f - w0 nearly vanishes at a sample, and
/// ConvergenceError when the sample budget is exhausted.
int winding_number(const FunctionHandle& f, Complex center, double radius, Complex w0,
                   const NumericSettings& settings = {});

}  // namespace schlicht
