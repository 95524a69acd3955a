#include "schlicht/winding.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "schlicht/errors.hpp"

namespace schlicht {
namespace {

struct Sample {
  Complex v;      // f(z) - w0
  double speed;   // |f'(z)|
};

struct Arc {
  double t0, t1;
  Sample s0, s1;
};

}  // namespace

int winding_number(const FunctionHandle& f, Complex center, double radius, Complex w0,
                   const NumericSettings& settings) {
  if (!(radius > 0.0)) throw PreconditionError("winding_number: radius must be positive");
  for (const auto& pole : f.poles) {
    if (std::abs(std::abs(pole.location - center) - radius) < settings.contour_pole_clearance) {
      throw DomainError("winding_number: contour passes within clearance of a pole");
    }
  }

  std::size_t evaluations = 0;
  auto sample = [&](double t) {
    if (++evaluations > settings.winding_sample_budget) {
      throw ConvergenceError("winding_number: adaptive refinement exceeded the sample budget");
    }
    const Complex z = center + std::polar(radius, t);
    const Complex v = f.eval(z) - w0;
    if (!(std::abs(v) >= settings.contour_hit_tol)) {
      throw DomainError("winding_number: f(z) = w0 (numerically) on the contour");
    }
    return Sample{v, std::abs(f.deriv(z))};
  };

  const std::size_t n = std::max<std::size_t>(settings.winding_initial_arcs, 4);
  const double two_pi = 2.0 * kPi;
  std::vector<Arc> stack;
  stack.reserve(64);
  std::vector<Sample> ring(n + 1);
  for (std::size_t i = 0; i < n; ++i) ring[i] = sample(two_pi * static_cast<double>(i) / static_cast<double>(n));
  ring[n] = ring[0];
  for (std::size_t i = n; i-- > 0;) {
    stack.push_back({two_pi * static_cast<double>(i) / static_cast<double>(n),
                     two_pi * static_cast<double>(i + 1) / static_cast<double>(n), ring[i], ring[i + 1]});
  }

  const double quarter_turn = 0.5 * kPi;
  double total = 0.0;
  while (!stack.empty()) {
    const Arc arc = stack.back();
    stack.pop_back();
    const double tm = 0.5 * (arc.t0 + arc.t1);
    const Sample mid = sample(tm);
    const double step = std::arg(arc.s1.v / arc.s0.v);
    const double a = std::arg(mid.v / arc.s0.v);
    const double b = std::arg(arc.s1.v / mid.v);
    // Besides the midpoint test, the arc must be short against the local
    // scale |f - w0| / |f'|; otherwise a whole turn can hide between samples.
    const double length = radius * (arc.t1 - arc.t0);
    const double speed = std::max({arc.s0.speed, mid.speed, arc.s1.speed});
    const double clearance = std::min({std::abs(arc.s0.v), std::abs(mid.v), std::abs(arc.s1.v)});
    if (std::abs(a) < quarter_turn && std::abs(b) < quarter_turn && std::abs(a + b - step) < 1e-9 &&
        length * speed <= 0.5 * clearance) {
      total += step;
      continue;
    }
    stack.push_back({tm, arc.t1, mid, arc.s1});
    stack.push_back({arc.t0, tm, arc.s0, mid});
  }
  return static_cast<int>(std::lround(total / two_pi));
}

}  // namespace schlicht
