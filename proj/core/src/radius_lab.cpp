#include "schlicht/radius_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "schlicht/errors.hpp"
#include "schlicht/winding.hpp"

namespace schlicht {
namespace {

struct Incumbent {
  double value = -1.0;
  Complex z;
};

// Admissible sample points: |z| <= outer_radius and at least pole_margin from
// every declared pole.
class DiskSampler {
 public:
  DiskSampler(const FunctionHandle& f, const GridSpec& grid) : f_(f), grid_(grid) {}

  bool admissible(Complex z) const {
    return std::abs(z) <= grid_.outer_radius && f_.pole_distance(z) >= grid_.pole_margin * (1.0 - 1e-12);
  }

  std::vector<Complex> base_points() const {
    std::vector<Complex> pts;
    const int n = grid_.radial_count;
    const int m = grid_.angular_count;
    pts.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m) + 1);
    auto push = [&](Complex z) {
      if (admissible(z)) pts.push_back(z);
    };
    push(Complex(0.0, 0.0));
    const double gap = 1.0 - grid_.outer_radius;
    for (int i = 1; i < n; ++i) {
      const double r = 1.0 - std::pow(gap, static_cast<double>(i) / static_cast<double>(n - 1));
      for (int j = 0; j < m; ++j) push(std::polar(r, 2.0 * kPi * j / m));
    }
    for (const auto& pole : f_.poles) {
      if (std::abs(pole.location) > 1.0 + grid_.pole_margin) continue;
      for (double d = grid_.pole_margin; d < 0.25; d *= 2.0) {
        for (int j = 0; j < 16; ++j) push(pole.location + std::polar(d, 2.0 * kPi * j / 16.0));
      }
    }
    return pts;
  }

  bool on_edge(Complex z) const {
    return std::abs(z) >= grid_.outer_radius * (1.0 - 1e-12) || f_.pole_distance(z) <= grid_.pole_margin * 1.0001;
  }

 private:
  const FunctionHandle& f_;
  const GridSpec& grid_;
};

template <class Objective>
Incumbent maximize(const FunctionHandle& f, const GridSpec& grid, Objective objective, std::stop_token stop) {
  grid.validate();
  DiskSampler sampler(f, grid);
  const auto pts = sampler.base_points();
  if (pts.empty()) throw PreconditionError("grid: pole_margin excludes every sample point");

  Incumbent best;
  auto consider = [&](Complex z) {
    const double v = objective(z);
    if (std::isfinite(v) && v > best.value) {
      best.value = v;
      best.z = z;
    }
  };
  for (const Complex z : pts) consider(z);
  if (best.value < 0.0) throw InvariantError("grid: objective is not finite at any sample");

  double half_width = std::numeric_limits<double>::infinity();
  for (const Complex z : pts) {
    if (z != best.z) half_width = std::min(half_width, std::abs(z - best.z));
  }
  if (!std::isfinite(half_width)) half_width = 1e-3;

  for (int pass = 0; pass < grid.refine_depth; ++pass) {
    if (stop.stop_requested()) break;
    const Complex anchor = best.z;
    const double step = half_width / 5.0;
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) {
        const Complex z = anchor + Complex(i * step, j * step);
        if (sampler.admissible(z)) consider(z);
      }
    }
    half_width = step;
  }
  return best;
}

double saturate(double value, double cap, bool& flagged) {
  if (!(value <= cap)) {
    flagged = true;
    return cap;
  }
  return value;
}

}  // namespace

void GridSpec::validate() const {
  if (radial_count < 8 || angular_count < 8) throw PreconditionError("GridSpec: counts must be >= 8");
  if (refine_depth < 0) throw PreconditionError("GridSpec: refine_depth must be >= 0");
  if (!(pole_margin >= 1e-6)) throw PreconditionError("GridSpec: pole_margin must be >= 1e-6");
  if (!(outer_radius > 0.0 && outer_radius < 1.0)) throw PreconditionError("GridSpec: outer_radius must lie in (0, 1)");
}

SeminormEstimate bloch_seminorm(const FunctionHandle& f, const GridSpec& grid, const NumericSettings& settings,
                                std::stop_token stop) {
  auto objective = [&](Complex z) { return (1.0 - std::norm(z)) * std::abs(f.deriv(z)); };
  const Incumbent best = maximize(f, grid, objective, stop);
  DiskSampler sampler(f, grid);
  SeminormEstimate est{best.value, best.z, sampler.on_edge(best.z)};
  est.value = saturate(est.value, settings.overflow_cap, est.truncated);
  return est;
}

double fit_growth_exponent(const std::vector<DivergencePoint>& points) {
  const std::size_t n = std::min<std::size_t>(points.size(), 10);
  if (n < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = points.size() - n; i < points.size(); ++i) {
    const double x = -std::log(1.0 - points[i].t);
    const double y = std::log(points[i].value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

DivergenceProfile radial_growth_profile(const FunctionHandle& f, Complex zeta0, int depth,
                                        const NumericSettings& settings) {
  if (depth < 1 || depth > 40) throw PreconditionError("divergence profile: depth must lie in [1, 40]");
  if (!(std::abs(std::abs(zeta0) - 1.0) < 1e-12)) {
    throw PreconditionError("divergence profile: direction must be a unit-modulus point");
  }
  DivergenceProfile profile;
  for (int k = 1; k <= depth; ++k) {
    const double t = 1.0 - std::ldexp(1.0, -k);
    // 1 - t is exact here; (1 - t)(1 + t) avoids the cancellation in 1 - t^2.
    const double value = (1.0 - t) * (1.0 + t) * std::abs(f.deriv(t * zeta0));
    if (!std::isfinite(value) || value > settings.overflow_cap) {
      profile.halted = true;
      break;
    }
    profile.points.push_back({k, t, value});
  }
  profile.exponent = fit_growth_exponent(profile.points);
  return profile;
}

DivergenceProfile divergence_profile(const FunctionHandle& f, int depth, const NumericSettings& settings) {
  if (!f.has_pole_at(Complex(1.0, 0.0))) {
    throw PreconditionError("divergence_profile: function must declare a simple pole at z = 1");
  }
  return radial_growth_profile(f, Complex(1.0, 0.0), depth, settings);
}

double bloch_constant_lower() { return std::sqrt(3.0) / 4.0 + 2e-4; }
double landau_constant_lower() { return 0.5 + 2e-8; }

RadiusReport bloch_lower_bound(const FunctionHandle& f, const GridSpec& grid, const NumericSettings& settings,
                               std::stop_token stop) {
  if (!(std::abs(f.deriv(Complex(0.0, 0.0)) - 1.0) <= 1e-8)) {
    throw PreconditionError("bloch_lower_bound: requires the normalization f'(0) = 1");
  }
  auto objective = [&](Complex z) {
    const double d = std::min(1.0 - std::abs(z), f.pole_distance(z));
    return d * std::abs(f.deriv(z));
  };
  const Incumbent best = maximize(f, grid, objective, stop);
  DiskSampler sampler(f, grid);

  RadiusReport report;
  report.kind = RadiusKind::bloch;
  report.constant_used = bloch_constant_lower();
  report.function_label = f.label;
  report.truncated = sampler.on_edge(best.z);
  report.lower_bound = saturate(report.constant_used * best.value, settings.overflow_cap, report.truncated);
  return report;
}

MoebiusImage moebius_image_circle(double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("moebius_image_circle: p must lie in (0, 1)");
  const double denom = 1.0 - p * p;
  MoebiusImage image;
  image.domain = ExteriorDomain{ExcludedDisk{Complex(-p / denom, 0.0), p * p / denom}};
  image.f = moebius_pole(p);
  image.inverse = [p](Complex w) { return p * w / (p + w); };
  return image;
}

InjectivityCertificate certify_injective(const MoebiusImage& image, const DiskWitness& witness, double tol,
                                         int samples) {
  InjectivityCertificate cert;
  const double pole = image.f.poles.front().location.real();
  const int rings = 4;
  const int per_ring = std::max(samples / rings, 1);
  bool ok = true;
  for (int ring = 1; ring <= rings; ++ring) {
    const double radius = witness.radius * ring / rings;
    for (int j = 0; j < per_ring; ++j) {
      const Complex w = witness.center + std::polar(radius, 2.0 * kPi * (j + 0.5 * (ring % 2)) / per_ring);
      const Complex z = image.inverse(w);
      ++cert.samples;
      if (!(std::abs(z) < 1.0) || z == Complex(pole, 0.0)) {
        ok = false;
        continue;
      }
      const Complex fz = image.f.eval(z);
      const double round_trip = std::abs(image.inverse(fz) - z);
      cert.max_round_trip = std::max(cert.max_round_trip, round_trip);
      // Measured in z: near the pole f(z) itself carries a relative error of
      // order eps / |p - z|, which is unavoidable for large witness radii.
      if (!(round_trip < tol)) ok = false;
    }
  }
  cert.passed = ok;
  return cert;
}

const ConstantEntry& ConstantsTable::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("ConstantsTable: no entry named " + name);
}

ConstantsTable classical_constants() {
  const double ahlfors_grunsky =
      std::tgamma(1.0 / 3.0) * std::tgamma(11.0 / 12.0) / (std::tgamma(0.25) * std::sqrt(1.0 + std::sqrt(3.0)));
  const double rademacher = std::tgamma(1.0 / 3.0) * std::tgamma(5.0 / 6.0) / std::tgamma(1.0 / 6.0);
  ConstantsTable table;
  table.entries = {
      {"B", "Bloch constant", bloch_constant_lower(), ahlfors_grunsky, "sqrt(3)/4 + 2e-4", "~ 0.4719",
       "Chen and Gauthier (1996)", "Ahlfors and Grunsky (1937)"},
      {"L", "Landau constant", landau_constant_lower(), rademacher, "1/2 + 2e-8", "~ 0.5433",
       "Chen and Shiba (2004)", "Rademacher (1943)"},
      {"U", "univalent Bloch constant", 0.5708858, 0.6563937, "0.5708858", "0.6563937", "Skinner (2009)",
       "Carroll and Cerda (2009)"},
      {"B_l", "locally univalent Bloch constant", 0.5 + 2e-8, std::nullopt, "1/2 + 2e-8", "", "Chen and Shiba (2004)",
       ""},
      {"meromorphic_plane_locally_univalent", "Bloch constant, locally univalent meromorphic functions on C",
       kPi / 2.0, kPi / 2.0, "pi/2", "pi/2", "Minda (1982)", "Minda (1982)"},
      {"meromorphic_plane", "Bloch constant, meromorphic functions on C", std::atan(std::sqrt(8.0)),
       std::atan(std::sqrt(8.0)), "arctan(sqrt(8))", "arctan(sqrt(8))", "Bonk and Eremenko (2000)",
       "Bonk and Eremenko (2000)"},
      {"meromorphic_plane_minda_bracket", "earlier bracket for the meromorphic-plane Bloch constant", kPi / 3.0,
       2.0 * std::atan(1.0 / std::sqrt(2.0)), "pi/3", "2 arctan(1/sqrt(2))", "Minda (1982)", "Minda (1982)"},
  };
  return table;
}

TheoremABounds theorem_A_bounds(double p, double fprime0) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("theorem_A_bounds: p must lie in (0, 1)");
  if (!(fprime0 > 0.0)) throw PreconditionError("theorem_A_bounds: |f'(0)| must be positive");
  const double factor = 4.0 * p * fprime0 / ((1.0 + p) * (1.0 + p));
  return {factor * bloch_constant_lower(), factor * landau_constant_lower()};
}

FactorizationCheck check_factorization(double p, int disks, std::uint64_t seed, const NumericSettings& settings) {
  const MoebiusImage image = moebius_image_circle(p);
  const Domain omega = SlitDiskDomain::omega_p(p);
  FactorizationCheck check;
  check.scale = rho(p);
  const double scale = check.scale;

  // w in f(Omega_p)
  auto in_f_omega = [&](Complex w) {
    const Complex z = image.inverse(w);
    return std::isfinite(z.real()) && std::isfinite(z.imag()) && contains(omega, z, settings);
  };
  // w' in g(D), g = f o eta / scale, confirmed through zeta and back through eta
  auto in_g_image = [&](Complex wg) {
    const Complex w = scale * wg;
    if (!in_f_omega(w)) return false;
    const Complex zeta_pt = zeta(p, image.inverse(w), settings);
    if (!(std::abs(zeta_pt) < 1.0)) return false;
    const Complex back = image.f.eval(eta(p, zeta_pt, settings)) / scale;
    return std::abs(back - wg) <= 1e-8 * std::max(1.0, std::abs(wg));
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-40.0, 40.0);
  std::uniform_real_distribution<double> radius(0.05, 5.0);
  int attempts = 0;
  while (check.disks < disks && attempts < 1000 * std::max(disks, 1)) {
    ++attempts;
    const DiskWitness g_disk{Complex(coord(rng), coord(rng)), radius(rng), true};
    const auto g_pts = witness_samples(g_disk);
    if (!std::all_of(g_pts.begin(), g_pts.end(), in_g_image)) continue;
    ++check.disks;
    const DiskWitness scaled{scale * g_disk.center, scale * g_disk.radius, true};
    const auto f_pts = witness_samples(scaled);
    if (std::all_of(f_pts.begin(), f_pts.end(), in_f_omega)) ++check.passed;
  }
  return check;
}

RefutationReport refutation_report(double p, double target, const NumericSettings& settings, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("refutation_report: p must lie in (0, 1)");
  if (!(target > 0.0)) throw PreconditionError("refutation_report: target radius must be positive");

  RefutationReport out;
  RadiusReport& report = out.radius;
  report.truncated = false;
  const double radius = saturate(target, settings.overflow_cap, report.truncated);

  const MoebiusImage image = moebius_image_circle(p);
  DiskWitness witness = witness_disk(Domain{image.domain}, radius, settings);
  const InjectivityCertificate cert = certify_injective(image, witness, settings.eval_tol);
  witness.schlicht = cert.passed;

  const TheoremABounds conjectured = theorem_A_bounds(p, 1.0);
  report.kind = cert.passed ? RadiusKind::bloch : RadiusKind::landau;
  report.lower_bound = witness.radius;
  report.witness = witness;
  report.constant_used = bloch_constant_lower();
  report.conjectured_bound = conjectured.bloch_bound;
  report.function_label = image.f.label;
  report.certificate = cert;

  out.ratio = witness.radius / conjectured.bloch_bound;
  out.factorization = check_factorization(p, 10, seed, settings);
  return out;
}

namespace {

bool on_positive_axis(Complex z) { return z.real() > 0.0 && std::abs(z.imag()) <= 1e-14 * std::abs(z); }

}  // namespace

TwoPoleReport two_pole_report(double p, Complex mu, double target, const NumericSettings& settings) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("two_pole_report: p must lie in (0, 1)");
  if (!(std::abs(mu) > 0.0 && std::abs(mu) < 1.0)) {
    throw PreconditionError("two_pole_report: mu must lie in the punctured unit disk");
  }
  if (!(std::abs(mu - p) > 1e-12)) throw PreconditionError("two_pole_report: poles must be distinct");
  if (!(target > 0.0)) throw PreconditionError("two_pole_report: target must be positive");

  TwoPoleReport out;
  out.p = p;
  out.mu = mu;

  Complex first(p, 0.0);
  Complex second = mu;
  if (on_positive_axis(mu)) {
    // Same ray: psi moves the poles to z1 < 0 < z2.
    out.case_number = 2;
    const double lo = std::min(p, mu.real());
    const double hi = std::max(p, mu.real());
    out.preimages = pole_preimages(lo, hi);
    first = out.preimages->second;
    second = out.preimages->first;
  }

  const Complex ratio = second / first;
  if (ratio.real() < 0.0 && std::abs(ratio.imag()) <= 1e-14 * std::abs(ratio)) {
    // Opposite rays give a slit angle of 0 in the two-slit map. Move both poles
    // with the automorphism z -> (z + c)/(1 + conj(c) z), then rotate the first
    // one back onto the positive axis.
    const Complex c(0.0, 0.5);
    auto pull_back = [&](Complex w) { return (w - c) / (1.0 - std::conj(c) * w); };
    const Complex a = pull_back(first);
    const Complex b = pull_back(second);
    const Complex unrotate = std::polar(1.0, -std::arg(a));
    first = Complex(std::abs(a), 0.0);
    second = b * unrotate;
    out.tilted = true;
    if (on_positive_axis(second / first)) throw InvariantError("two_pole_report: tilt left the poles on one ray");
  }

  out.p_eff = first.real();
  Complex preimage = real_slit_inverse(out.p_eff, second, settings);
  if (preimage.imag() < 0.0) {
    // xi(r1, theta) is the preimage of -1 only for theta in (0, pi]; reflect
    // the whole configuration through the real axis.
    preimage = std::conj(preimage);
    second = std::conj(second);
    out.reflected = true;
  }
  out.mu_eff = second;
  out.p1 = std::abs(preimage);
  out.theta = std::arg(preimage);
  if (!(out.theta > 1e-12)) throw InvariantError("two_pole_report: degenerate slit angle");

  const TwoSlitParams params = TwoSlitParams::make(out.p_eff, out.p1, out.theta, settings);
  out.anchor = params.anchor;
  out.xi1 = params.xi1;
  if (!(std::abs(params.anchor - out.mu_eff) < 1e-10)) {
    throw InvariantError("two_pole_report: anchor of the two-slit map misses the second pole");
  }

  auto h = [&](Complex z) { return two_slit_map(params, z, settings); };
  auto H = [&](Complex w) { return two_slit_inverse(params, w, settings); };
  auto check = [](Complex value, Complex expected) { return LimitCheck{value, expected, std::abs(value - expected)}; };

  out.h_at_minus_one = check(boundary_value(h, Complex(-1.0, 0.0), settings), params.anchor);
  out.h_at_xi = check(boundary_value(h, params.xi1, settings), Complex(out.p_eff, 0.0));
  out.H_at_p = check(radial_limit([&](double s) { return H(Complex(out.p_eff - s, 0.0)); }, settings.boundary_gap),
                     params.xi1);
  Complex anchor_limit;
  try {
    anchor_limit = radial_limit([&](double s) { return H(params.anchor * (1.0 - s)); }, settings.boundary_gap);
  } catch (const DomainError&) {
    // the curve slit leaves its tip inward: approach against its tangent instead
    const Complex tangent = (params.curve[1] - params.curve[0]) / std::abs(params.curve[1] - params.curve[0]);
    anchor_limit = radial_limit([&](double s) { return H(params.anchor - s * tangent); }, settings.boundary_gap);
  }
  out.H_at_anchor = check(anchor_limit, Complex(-1.0, 0.0));

  // g = c (f o h) with c = 1 / h'(0), so that g'(0) = 1 (f'(0) = 1 already).
  const FunctionHandle f = two_pole_rational(out.p_eff, out.mu_eff);
  const Complex c = 1.0 / two_slit_derivative(params, Complex(0.0, 0.0), settings);
  FunctionHandle g;
  g.eval = [=](Complex z) { return c * f.eval(two_slit_map(params, z, settings)); };
  g.deriv = [=](Complex z) {
    return c * f.deriv(two_slit_map(params, z, settings)) * two_slit_derivative(params, z, settings);
  };
  // h folds a neighbourhood of each preimage onto a slit tip, so the poles of g are double.
  g.poles = {{Complex(-1.0, 0.0), 2}, {params.xi1, 2}};
  g.label = "two-pole-rational o h";

  const FunctionHandle h_handle{h, [&](Complex z) { return two_slit_derivative(params, z, settings); }, {}, "h"};
  const double contour = 1.0 - 1e-4;
  out.pole_free = winding_number(h_handle, Complex(0.0, 0.0), contour, Complex(out.p_eff, 0.0), settings) == 0 &&
                  winding_number(h_handle, Complex(0.0, 0.0), contour, out.mu_eff, settings) == 0;

  out.growth = radial_growth_profile(g, Complex(-1.0, 0.0), 20, settings);

  for (int k = 2; k <= 10; ++k) {
    GridSpec grid;
    grid.radial_count = 48;
    grid.angular_count = 96;
    grid.refine_depth = 2;
    grid.outer_radius = 1.0 - std::pow(10.0, -k);
    out.radius = bloch_lower_bound(g, grid, settings);
    if (out.radius.lower_bound >= target) break;
  }
  return out;
}

}  // namespace schlicht
