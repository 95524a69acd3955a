#include "schlicht/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schlicht/errors.hpp"

namespace schlicht {

double FunctionHandle::pole_distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pole : poles) best = std::min(best, std::abs(z - pole.location));
  return best;
}

bool FunctionHandle::has_pole_at(Complex location, double tol) const {
  return std::any_of(poles.begin(), poles.end(),
                     [&](const Pole& pole) { return std::abs(pole.location - location) <= tol; });
}

FunctionHandle identity_function() {
  return {[](Complex z) { return z; }, [](Complex) { return Complex(1.0, 0.0); }, {}, "identity"};
}

FunctionHandle z_over_one_minus_z() {
  return {[](Complex z) { return z / (1.0 - z); },
          [](Complex z) {
            const Complex d = 1.0 - z;
            return 1.0 / (d * d);
          },
          {{Complex(1.0, 0.0), 1}},
          "z-over-1-minus-z"};
}

FunctionHandle z_plus_z2_over_one_minus_z() {
  return {[](Complex z) { return (z + z * z) / (1.0 - z); },
          [](Complex z) {
            const Complex d = 1.0 - z;
            return (1.0 + 2.0 * z - z * z) / (d * d);
          },
          {{Complex(1.0, 0.0), 1}},
          "z-plus-z2-over-1-minus-z"};
}

FunctionHandle moebius_pole(double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("moebius_pole: p must lie in (0, 1)");
  return {[p](Complex z) { return p * z / (p - z); },
          [p](Complex z) {
            const Complex d = p - z;
            return p * p / (d * d);
          },
          {{Complex(p, 0.0), 1}},
          "moebius-pole-p"};
}

FunctionHandle two_pole_rational(double p, Complex mu) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("two_pole_rational: p must lie in (0, 1)");
  if (!(std::abs(mu) > 0.0 && std::abs(mu) < 1.0)) {
    throw PreconditionError("two_pole_rational: mu must lie in the punctured unit disk");
  }
  if (std::abs(mu - p) < 1e-12) throw PreconditionError("two_pole_rational: poles must be distinct");

  const Complex pc(p, 0.0);
  double weight = 1.0;
  Complex slope = 1.0 / (pc * pc) + weight / (mu * mu);
  if (std::abs(slope) < 1e-8) {
    weight = 2.0;
    slope = 1.0 / (pc * pc) + weight / (mu * mu);
  }
  // f'(0) = -c * slope
  const Complex c = -1.0 / slope;
  return {[=](Complex z) { return c * (1.0 / (z - pc) + weight / (z - mu)); },
          [=](Complex z) {
            const Complex a = z - pc;
            const Complex b = z - mu;
            return -c * (1.0 / (a * a) + weight / (b * b));
          },
          {{pc, 1}, {mu, 1}},
          "two-pole-rational"};
}

FunctionHandle koebe_handle(UnitRotation u) {
  return {[u](Complex z) { return koebe(u, z); }, [u](Complex z) { return koebe_derivative(u, z); },
          {{-std::conj(u.value()), 2}},
          "koebe"};
}

double derivative_mismatch(const FunctionHandle& f, std::span<const Complex> points, double step) {
  double worst = 0.0;
  for (const Complex z : points) {
    auto central = [&](double h) { return (f.eval(z + h) - f.eval(z - h)) / (2.0 * h); };
    const Complex richardson = (4.0 * central(0.5 * step) - central(step)) / 3.0;
    const Complex exact = f.deriv(z);
    const double scale = std::max(std::abs(exact), 1e-300);
    worst = std::max(worst, std::abs(richardson - exact) / scale);
  }
  return worst;
}

}  // namespace schlicht
