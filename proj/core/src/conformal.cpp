#include "schlicht/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "schlicht/errors.hpp"

namespace schlicht {
namespace {

const Complex kOne(1.0, 0.0);

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

void require_in_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(what) + ": point " + describe(z) + " is not in the open unit disk");
  }
}

double distance_to_segment(Complex w, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(w - a);
  const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_intersect(Complex a, Complex b, Complex c, Complex d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  // touching counts as blocked
  return distance_to_segment(c, a, b) == 0.0 || distance_to_segment(d, a, b) == 0.0 ||
         distance_to_segment(a, c, d) == 0.0 || distance_to_segment(b, c, d) == 0.0;
}

double polyline_distance(Complex w, const std::vector<Complex>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    best = std::min(best, distance_to_segment(w, pts[i], pts[i + 1]));
  }
  if (pts.size() == 1) best = std::abs(w - pts.front());
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Koebe

UnitRotation::UnitRotation(Complex u) : u_(u) {
  if (!(std::abs(std::abs(u) - 1.0) <= 1e-12)) {
    throw PreconditionError("UnitRotation: |u| must be 1, got " + describe(u));
  }
}

Complex koebe(UnitRotation u, Complex z, const NumericSettings& settings) {
  const Complex den = kOne + u.value() * z;
  if (std::abs(den) < settings.koebe_pole_tol) {
    throw PoleError("koebe: z = " + describe(z) + " is the pole of k_u");
  }
  return z / (den * den);
}

Complex koebe_derivative(UnitRotation u, Complex z, const NumericSettings& settings) {
  const Complex uz = u.value() * z;
  const Complex den = kOne + uz;
  if (std::abs(den) < settings.koebe_pole_tol) {
    throw PoleError("koebe_derivative: z = " + describe(z) + " is the pole of k_u");
  }
  return (kOne - uz) / (den * den * den);
}

Complex inverse_koebe(UnitRotation u, Complex w, const NumericSettings& settings) {
  const Complex v = u.value() * w;
  if (v.real() >= 0.25 && std::abs(v.imag()) <= settings.cut_tol * std::max(1.0, std::abs(v))) {
    throw DomainError("inverse_koebe: u*w = " + describe(v) + " lies on the omitted ray [1/4, oo)");
  }
  const Complex a = std::sqrt(kOne - 4.0 * v);
  const Complex one_plus_a = kOne + a;
  const Complex s = 4.0 * v / (one_plus_a * one_plus_a);
  return s * std::conj(u.value());
}

// ---------------------------------------------------------------------------
// Limits

Complex radial_limit(const std::function<Complex(double)>& approach, double gap, int levels) {
  if (!(gap > 0.0) || levels < 1) throw PreconditionError("radial_limit: need gap > 0 and levels >= 1");
  std::vector<double> h(static_cast<std::size_t>(levels));
  std::vector<Complex> table(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) {
    const double s = gap * std::pow(4.0, k);
    h[static_cast<std::size_t>(k)] = std::sqrt(s);
    table[static_cast<std::size_t>(k)] = approach(s);
  }
  // Neville's scheme evaluated at h = 0.
  for (int m = 1; m < levels; ++m) {
    for (int k = 0; k + m < levels; ++k) {
      const double hk = h[static_cast<std::size_t>(k)];
      const double hm = h[static_cast<std::size_t>(k + m)];
      table[static_cast<std::size_t>(k)] =
          (hm * table[static_cast<std::size_t>(k)] - hk * table[static_cast<std::size_t>(k + 1)]) / (hm - hk);
    }
  }
  return table.front();
}

Complex boundary_value(const std::function<Complex(Complex)>& f, Complex point, const NumericSettings& settings) {
  return radial_limit([&](double s) { return f((1.0 - s) * point); }, settings.boundary_gap);
}

// ---------------------------------------------------------------------------
// Radial slit

double rho(double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("rho: x must lie in (0, 1], got " + std::to_string(x));
  }
  return 4.0 * x / ((1.0 + x) * (1.0 + x));
}

Complex xi(double rho_val, double theta) {
  const double half_sin = std::sin(0.5 * theta);
  if (std::abs(half_sin) < 1e-15) {
    throw PreconditionError("xi: theta is a multiple of 2 pi; the slit degenerates onto the real axis");
  }
  const double rs = rho_val * half_sin * half_sin;
  if (!(rs > 0.0 && rs <= 1.0)) {
    throw PreconditionError("xi: rho * sin^2(theta/2) must lie in (0, 1]");
  }
  // rs * sqrt(1/rs - 1) == sqrt(rs (1 - rs)) without the division.
  return {1.0 - 2.0 * rs, -2.0 * std::sqrt(rs * (1.0 - rs))};
}

SlitParams SlitParams::make(double x, double theta, const NumericSettings& settings) {
  if (!(x > 0.0 && x < 1.0)) {
    throw PreconditionError("SlitParams: x must lie in (0, 1)");
  }
  if (!(theta > 0.0 && theta < 2.0 * kPi)) {
    throw PreconditionError("SlitParams: theta must lie in (0, 2 pi)");
  }
  SlitParams params;
  params.x = x;
  params.theta = theta;
  params.rho = schlicht::rho(x);
  params.xi = schlicht::xi(params.rho, theta);

  const Complex limit =
      boundary_value([&](Complex z) { return omega_slit(params, z, settings); }, params.xi, settings);
  if (!(std::abs(limit + 1.0) < settings.radial_limit_tol)) {
    throw InvariantError("SlitParams: omega(t xi) does not approach -1 (got " + describe(limit) +
                         "); the xi branch does not match theta");
  }
  return params;
}

Complex omega_slit(const SlitParams& params, Complex z, const NumericSettings& settings) {
  require_in_disk(z, "omega_slit");
  const auto m = UnitRotation::minus();
  const Complex inner = inverse_koebe(m, params.rho * koebe(m, z, settings), settings);
  return -std::polar(1.0, params.theta) * inner;
}

Complex omega_slit_derivative(const SlitParams& params, Complex z, const NumericSettings& settings) {
  require_in_disk(z, "omega_slit_derivative");
  const auto m = UnitRotation::minus();
  const Complex inner = inverse_koebe(m, params.rho * koebe(m, z, settings), settings);
  const Complex d_inner =
      params.rho * koebe_derivative(m, z, settings) / koebe_derivative(m, inner, settings);
  return -std::polar(1.0, params.theta) * d_inner;
}

// ---------------------------------------------------------------------------
// eta / zeta

Complex eta(double p, Complex z, const NumericSettings& settings) {
  require_in_disk(z, "eta");
  const auto u = UnitRotation::plus();
  return inverse_koebe(u, rho(p) * koebe(u, z, settings), settings);
}

Complex eta_derivative(double p, Complex z, const NumericSettings& settings) {
  require_in_disk(z, "eta_derivative");
  const auto u = UnitRotation::plus();
  const double r = rho(p);
  const Complex value = inverse_koebe(u, r * koebe(u, z, settings), settings);
  return r * koebe_derivative(u, z, settings) / koebe_derivative(u, value, settings);
}

namespace {

void require_in_omega_p(double p, Complex w, const NumericSettings& settings, const char* what) {
  require_in_disk(w, what);
  if (distance_to_segment(w, Complex(p, 0.0), kOne) <= settings.slit_band) {
    throw DomainError(std::string(what) + ": point " + describe(w) + " lies on the slit [p, 1)");
  }
}

}  // namespace

Complex zeta(double p, Complex w, const NumericSettings& settings) {
  require_in_omega_p(p, w, settings, "zeta");
  const auto u = UnitRotation::plus();
  return inverse_koebe(u, koebe(u, w, settings) / rho(p), settings);
}

Complex zeta_derivative(double p, Complex w, const NumericSettings& settings) {
  require_in_omega_p(p, w, settings, "zeta_derivative");
  const auto u = UnitRotation::plus();
  const double r = rho(p);
  const Complex value = inverse_koebe(u, koebe(u, w, settings) / r, settings);
  return koebe_derivative(u, w, settings) / (r * koebe_derivative(u, value, settings));
}

// ---------------------------------------------------------------------------
// Real-axis slit map in the -K_-(r k_-(.)) form

Complex real_slit_map(double p, Complex w, const NumericSettings& settings) {
  require_in_disk(w, "real_slit_map");
  const auto m = UnitRotation::minus();
  return -inverse_koebe(m, rho(p) * koebe(m, w, settings), settings);
}

Complex real_slit_map_derivative(double p, Complex w, const NumericSettings& settings) {
  require_in_disk(w, "real_slit_map_derivative");
  const auto m = UnitRotation::minus();
  const double r = rho(p);
  const Complex inner = inverse_koebe(m, r * koebe(m, w, settings), settings);
  return -r * koebe_derivative(m, w, settings) / koebe_derivative(m, inner, settings);
}

Complex real_slit_inverse(double p, Complex v, const NumericSettings& settings) {
  require_in_omega_p(p, v, settings, "real_slit_inverse");
  const auto m = UnitRotation::minus();
  return inverse_koebe(m, koebe(m, -v, settings) / rho(p), settings);
}

// ---------------------------------------------------------------------------
// Two-slit map

std::vector<Complex> curve_slit_samples(double p, double p1, double theta,
                                        const NumericSettings& settings) {
  const std::size_t n = std::max<std::size_t>(settings.curve_samples, 2);
  const double span = 1.0 - p1;
  const double ratio = settings.curve_end_gap / span;
  const Complex dir = std::polar(1.0, theta);
  std::vector<Complex> pts;
  pts.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double frac = static_cast<double>(j) / static_cast<double>(n - 1);
    const double t = j == 0 ? p1 : 1.0 - span * std::pow(ratio, frac);
    pts.push_back(real_slit_map(p, t * dir, settings));
  }
  return pts;
}

TwoSlitParams TwoSlitParams::make(double p, double p1, double theta, const NumericSettings& settings) {
  if (!(p > 0.0 && p < 1.0) || !(p1 > 0.0 && p1 < 1.0)) {
    throw PreconditionError("TwoSlitParams: p and p1 must lie in (0, 1)");
  }
  TwoSlitParams params;
  params.p = p;
  params.p1 = p1;
  params.theta = theta;
  params.r = schlicht::rho(p);
  params.r1 = schlicht::rho(p1);
  params.inner = SlitParams::make(p1, theta, settings);
  params.xi1 = params.inner.xi;
  params.anchor = real_slit_map(p, std::polar(p1, theta), settings);

  if (!(std::abs(std::abs(params.xi1) - 1.0) <= 1e-10)) {
    throw InvariantError("TwoSlitParams: |xi(r1, theta)| != 1");
  }
  if (!(std::abs(params.anchor) < 1.0)) {
    throw InvariantError("TwoSlitParams: anchor outside the unit disk");
  }

  // C(p1, theta) ends on the unit circle or, for theta beyond an angle that
  // depends on p, on [p, 1) itself; theta = pi lands on the tip. The limit
  // point is appended so the polyline leaves no gap.
  params.curve = curve_slit_samples(p, p1, theta, settings);
  const Complex end = params.curve.back();
  if (std::abs(end) > 1.0 - 1e-4) {
    params.curve.push_back(end / std::abs(end));
  } else if (std::abs(end - p) < 1e-4) {
    throw PreconditionError("TwoSlitParams: the curve slit ends at the tip of [p, 1); theta must stay below pi");
  } else if (std::abs(end.imag()) < 1e-4 && end.real() > p && end.real() < 1.0) {
    params.curve.push_back(Complex(end.real(), 0.0));
  } else {
    throw InvariantError("TwoSlitParams: curve slit polyline ends neither on the circle nor on [p, 1)");
  }

  const int n = std::max(settings.seed_grid, 4);
  params.seeds.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 1);
  params.seeds.push_back({Complex(0.0, 0.0), Complex(0.0, 0.0)});
  for (int i = 0; i < n; ++i) {
    const double s = 1.0 - static_cast<double>(i + 1) / static_cast<double>(n + 1);
    const double radius = 1.0 - s * s;
    for (int j = 0; j < n; ++j) {
      const Complex z = std::polar(radius, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
      params.seeds.push_back({z, two_slit_map(params, z, settings)});
    }
  }
  return params;
}

Complex two_slit_map(const TwoSlitParams& params, Complex z, const NumericSettings& settings) {
  const Complex w = omega_slit(params.inner, z, settings);
  if (!(std::abs(w) < 1.0)) {
    throw InvariantError("two_slit_map: intermediate value left the unit disk");
  }
  return real_slit_map(params.p, w, settings);
}

Complex two_slit_derivative(const TwoSlitParams& params, Complex z, const NumericSettings& settings) {
  const Complex w = omega_slit(params.inner, z, settings);
  if (!(std::abs(w) < 1.0)) {
    throw InvariantError("two_slit_derivative: intermediate value left the unit disk");
  }
  return real_slit_map_derivative(params.p, w, settings) * omega_slit_derivative(params.inner, z, settings);
}

bool in_two_slit_domain(const TwoSlitParams& params, Complex w, const NumericSettings& settings) {
  if (!(std::abs(w) < 1.0 - settings.slit_band)) return false;
  if (distance_to_segment(w, Complex(params.p, 0.0), kOne) <= settings.slit_band) return false;
  return polyline_distance(w, params.curve) > settings.slit_band;
}

namespace {

bool visible(const TwoSlitParams& params, Complex from, Complex to) {
  if (segments_intersect(from, to, Complex(params.p, 0.0), kOne)) return false;
  for (std::size_t i = 0; i + 1 < params.curve.size(); ++i) {
    if (segments_intersect(from, to, params.curve[i], params.curve[i + 1])) return false;
  }
  return true;
}

std::optional<Complex> try_map(const TwoSlitParams& params, Complex z, const NumericSettings& settings) {
  if (!(std::abs(z) < 1.0)) return std::nullopt;
  try {
    return two_slit_map(params, z, settings);
  } catch (const DomainError&) {
    // z so close to the unit circle that an intermediate value rounds onto a cut
    return std::nullopt;
  }
}

// Damped Newton for h(z) = target; steps are halved until they stay in D and
// reduce the residual.
bool newton_solve(const TwoSlitParams& params, Complex target, Complex& z,
                  const NumericSettings& settings) {
  const auto start = try_map(params, z, settings);
  if (!start) return false;
  Complex residual = *start - target;
  for (int it = 0; it < settings.newton_max_iter; ++it) {
    if (std::abs(residual) < settings.newton_tol) return true;
    const Complex dh = two_slit_derivative(params, z, settings);
    if (dh == Complex(0.0, 0.0)) return false;
    const Complex step = residual / dh;
    double lambda = 1.0;
    bool moved = false;
    while (lambda > 1e-12) {
      const Complex candidate = z - lambda * step;
      if (const auto value = try_map(params, candidate, settings)) {
        const Complex r = *value - target;
        if (std::abs(r) < std::abs(residual)) {
          z = candidate;
          residual = r;
          moved = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!moved) return std::abs(residual) < settings.newton_tol;
  }
  return std::abs(residual) < settings.newton_tol;
}

// Continuation along the straight path from a seed image to the target.
bool continuation_solve(const TwoSlitParams& params, const SeedPoint& seed, Complex target, int steps,
                        Complex& z, const NumericSettings& settings) {
  z = seed.z;
  for (int k = 1; k <= steps; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(steps);
    const Complex w = seed.image + s * (target - seed.image);
    if (!newton_solve(params, w, z, settings)) return false;
  }
  return true;
}

}  // namespace

Complex two_slit_inverse(const TwoSlitParams& params, Complex w, const NumericSettings& settings) {
  if (!in_two_slit_domain(params, w, settings)) {
    throw DomainError("two_slit_inverse: point " + describe(w) + " is not in Omega(p, p1, theta)");
  }
  std::vector<std::size_t> order(params.seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(params.seeds[a].image - w) < std::abs(params.seeds[b].image - w);
  });

  int tried = 0;
  for (const std::size_t idx : order) {
    if (tried >= settings.seed_candidates) break;
    const SeedPoint& seed = params.seeds[idx];
    if (!visible(params, seed.image, w)) continue;
    ++tried;
    Complex z = seed.z;
    if (newton_solve(params, w, z, settings)) return z;
    for (const int steps : {4, 16}) {
      if (continuation_solve(params, seed, w, steps, z, settings)) return z;
    }
  }
  throw ConvergenceError("two_slit_inverse: Newton did not converge for w = " + describe(w) +
                         " (too close to a slit?)");
}

// ---------------------------------------------------------------------------
// Moebius maps

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (!(std::abs(determinant()) > 1e-14)) {
    throw PreconditionError("MoebiusMap: ad - bc must be nonzero");
  }
}

Complex MoebiusMap::operator()(Complex z) const {
  const Complex den = c_ * z + d_;
  if (std::abs(den) < 1e-14) {
    throw PoleError("MoebiusMap: z = " + describe(z) + " is the pole of the map");
  }
  return (a_ * z + b_) / den;
}

Complex MoebiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  if (std::abs(den) < 1e-14) {
    throw PoleError("MoebiusMap: z = " + describe(z) + " is the pole of the map");
  }
  return determinant() / (den * den);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
  return {a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
          c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_};
}

MoebiusMap MoebiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

bool MoebiusMap::equivalent(const MoebiusMap& other, double tol) const {
  // Proportional coefficient vectors: all 2x2 minors vanish.
  const Complex lhs[4] = {a_, b_, c_, d_};
  const Complex rhs[4] = {other.a_, other.b_, other.c_, other.d_};
  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(lhs[i]) * std::abs(rhs[i]));
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double s = std::max({std::abs(lhs[i]) * std::abs(rhs[j]), std::abs(lhs[j]) * std::abs(rhs[i]), scale});
      if (std::abs(lhs[i] * rhs[j] - lhs[j] * rhs[i]) > tol * std::max(s, 1e-300)) return false;
    }
  }
  return true;
}

namespace {

void require_ordered_poles(double p, double q, const char* what) {
  if (!(p > 0.0 && p < q && q < 1.0)) {
    throw PreconditionError(std::string(what) + ": requires 0 < p < q < 1");
  }
}

}  // namespace

MoebiusMap psi(double p, double q) {
  require_ordered_poles(p, q, "psi");
  const double s = p + q;
  return {-2.0, s, -s, 2.0};
}

Complex psi(double p, double q, Complex z) { return psi(p, q)(z); }

std::pair<Complex, Complex> pole_preimages(double p, double q) {
  require_ordered_poles(p, q, "pole_preimages");
  const double s = p + q;
  return {Complex((p - q) / (2.0 - q * s), 0.0), Complex((q - p) / (2.0 - p * s), 0.0)};
}

}  // namespace schlicht
