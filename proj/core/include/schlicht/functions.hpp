#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schlicht/conformal.hpp"

namespace schlicht {

struct Pole {
  Complex location;
  int order = 1;
};

/// An evaluatable map on the unit disk with its analytic derivative and the
/// poles it declares (interior or on the unit circle).
struct FunctionHandle {
  std::function<Complex(Complex)> eval;
  std::function<Complex(Complex)> deriv;
  std::vector<Pole> poles;
  std::string label;

  /// Distance from z to the nearest declared pole (infinity when none).
  double pole_distance(Complex z) const;
  bool has_pole_at(Complex location, double tol = 1e-12) const;
};

FunctionHandle identity_function();

/// z / (1 - z): simple pole at 1, f'(0) = 1.
FunctionHandle z_over_one_minus_z();

/// (z + z^2) / (1 - z) = h(z) / (z - 1) with h(z) = -z - z^2, h(1) = -2.
FunctionHandle z_plus_z2_over_one_minus_z();

/// p z / (p - z): the normalized Moebius member of A_1(p).
FunctionHandle moebius_pole(double p);

/// c (1/(z - p) + w/(z - mu)), scaled so that f'(0) = 1. The weight w is 1
/// unless that makes f'(0) vanish (mu = +-i p), in which case it is 2.
FunctionHandle two_pole_rational(double p, Complex mu);

/// The rotated Koebe function k_u as a handle (pole at -1/u).
FunctionHandle koebe_handle(UnitRotation u);

/// Largest relative error between f.deriv and a Richardson-extrapolated
/// central difference of f.eval over the given points.
double derivative_mismatch(const FunctionHandle& f, std::span<const Complex> points, double step = 1e-3);

}  // namespace schlicht
