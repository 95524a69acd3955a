#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "registry.hpp"
#include "schlicht/conformal.hpp"
#include "schlicht/domain.hpp"
#include "schlicht/errors.hpp"
#include "schlicht/radius_lab.hpp"
#include "schlicht/report_json.hpp"

namespace schlicht::cli {
namespace {

using ordered = nlohmann::ordered_json;

ordered point(Complex z) { return ordered::array({z.real(), z.imag()}); }

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Complex mu_of(const Options& o) { return {o.mu_re, o.mu_im}; }

FunctionArgs function_args(const Options& o) { return {o.p, mu_of(o)}; }

GridSpec grid_of(const Options& o) {
  GridSpec grid;
  grid.radial_count = o.grid_radial;
  grid.angular_count = o.grid_angular;
  grid.refine_depth = o.refine;
  grid.outer_radius = o.outer_radius;
  grid.pole_margin = o.pole_margin;
  return grid;
}

[[noreturn]] void csv_unsupported(const std::string& command) {
  throw UsageError{"--format csv is not available for '" + command + "'"};
}

// map-eval

struct MapValue {
  Complex value;
  std::optional<Complex> derivative;
};

MapValue evaluate_map(const Options& o, const NumericSettings& s) {
  const Complex z(o.z_re, o.z_im);
  const UnitRotation plus(Complex(1.0, 0.0));
  const UnitRotation minus(Complex(-1.0, 0.0));
  if (o.map == "koebe-plus") return {koebe(plus, z, s), koebe_derivative(plus, z, s)};
  if (o.map == "koebe-minus") return {koebe(minus, z, s), koebe_derivative(minus, z, s)};
  if (o.map == "inverse-koebe-plus") return {inverse_koebe(plus, z, s), std::nullopt};
  if (o.map == "inverse-koebe-minus") return {inverse_koebe(minus, z, s), std::nullopt};
  if (o.map == "xi") return {xi(rho(o.x), o.theta), std::nullopt};
  if (o.map == "omega") {
    const SlitParams params = SlitParams::make(o.x, o.theta, s);
    return {omega_slit(params, z, s), omega_slit_derivative(params, z, s)};
  }
  if (o.map == "eta") return {eta(o.p, z, s), eta_derivative(o.p, z, s)};
  if (o.map == "zeta") return {zeta(o.p, z, s), zeta_derivative(o.p, z, s)};
  if (o.map == "real-slit") return {real_slit_map(o.p, z, s), real_slit_map_derivative(o.p, z, s)};
  if (o.map == "real-slit-inverse") return {real_slit_inverse(o.p, z, s), std::nullopt};
  if (o.map == "two-slit" || o.map == "two-slit-inverse") {
    const TwoSlitParams params = TwoSlitParams::make(o.p, o.p1, o.theta, s);
    if (o.map == "two-slit") return {two_slit_map(params, z, s), two_slit_derivative(params, z, s)};
    return {two_slit_inverse(params, z, s), std::nullopt};
  }
  if (o.map == "psi") {
    const MoebiusMap m = psi(o.p, o.q);
    return {m(z), m.derivative(z)};
  }
  throw UsageError{"unknown map '" + o.map + "'"};
}

std::string map_eval(const Options& o, const NumericSettings& s) {
  const MapValue v = evaluate_map(o, s);
  const Complex z(o.z_re, o.z_im);
  if (o.format == "csv") {
    std::string out = "map,z_re,z_im,value_re,value_im,derivative_re,derivative_im\n";
    out += o.map + "," + g17(z.real()) + "," + g17(z.imag()) + "," + g17(v.value.real()) + "," +
           g17(v.value.imag()) + ",";
    out += v.derivative ? g17(v.derivative->real()) + "," + g17(v.derivative->imag()) : std::string(",");
    return out + "\n";
  }
  ordered j;
  j["map"] = o.map;
  j["z"] = point(z);
  j["value"] = point(v.value);
  j["derivative"] = v.derivative ? point(*v.derivative) : ordered(nullptr);
  return j.dump(2) + "\n";
}

// map-verify

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool passed() const { return value < tolerance; }
};

std::vector<Complex> random_points(std::mt19937_64& rng, int count, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(unit(rng));
    pts.push_back(std::polar(r, 2.0 * kPi * unit(rng)));
  }
  return pts;
}

double max_error(const std::vector<Complex>& pts, const std::function<double(Complex)>& err) {
  double worst = 0.0;
  for (const Complex z : pts) worst = std::max(worst, err(z));
  return worst;
}

std::vector<Check> verify_map(const Options& o, const NumericSettings& s, std::mt19937_64& rng) {
  std::vector<Check> checks;
  const auto pts = random_points(rng, 100, 0.9);
  if (o.map == "koebe") {
    for (const double sign : {1.0, -1.0}) {
      const UnitRotation u(Complex(sign, 0.0));
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
          const Complex z = std::polar(0.99 * i / 49.0, 2.0 * kPi * j / 50.0);
          worst = std::max(worst, std::abs(inverse_koebe(u, koebe(u, z, s), s) - z));
        }
      }
      const std::string tag = sign > 0 ? "plus" : "minus";
      checks.push_back({"inverse_identity_" + tag, worst, s.eval_tol});
      checks.push_back({"derivative_" + tag, derivative_mismatch(koebe_handle(u), pts), 1e-6});
    }
  } else if (o.map == "omega") {
    const SlitParams params = SlitParams::make(o.x, o.theta, s);
    checks.push_back({"xi_on_circle", std::abs(std::abs(params.xi) - 1.0), 1e-12});
    const Complex limit = boundary_value([&](Complex z) { return omega_slit(params, z, s); }, params.xi, s);
    checks.push_back({"omega_at_xi", std::abs(limit + 1.0), s.radial_limit_tol});
    FunctionHandle f{[&](Complex z) { return omega_slit(params, z, s); },
                     [&](Complex z) { return omega_slit_derivative(params, z, s); }, {}, "omega"};
    checks.push_back({"derivative", derivative_mismatch(f, pts), 1e-6});
  } else if (o.map == "zeta") {
    const double expected = (1.0 + o.p) * (1.0 + o.p) / (4.0 * o.p);
    checks.push_back({"zeta_prime_at_0", std::abs(zeta_derivative(o.p, Complex(0.0, 0.0), s) - expected), 1e-8});
    checks.push_back({"zeta_eta_round_trip",
                      max_error(pts, [&](Complex z) { return std::abs(zeta(o.p, eta(o.p, z, s), s) - z); }),
                      s.eval_tol});
  } else if (o.map == "two-slit") {
    const TwoSlitParams params = TwoSlitParams::make(o.p, o.p1, o.theta, s);
    auto h = [&](Complex z) { return two_slit_map(params, z, s); };
    checks.push_back({"h_at_minus_one", std::abs(boundary_value(h, Complex(-1.0, 0.0), s) - params.anchor),
                      s.radial_limit_tol});
    checks.push_back({"h_at_xi1", std::abs(boundary_value(h, params.xi1, s) - o.p), s.radial_limit_tol});
    checks.push_back({"inverse_round_trip",
                      max_error(pts, [&](Complex z) { return std::abs(two_slit_inverse(params, h(z), s) - z); }),
                      1e-8});
  } else if (o.map == "psi") {
    const auto [z1, z2] = pole_preimages(o.p, o.q);
    checks.push_back({"z1_negative", z1.real() < 0.0 ? 0.0 : 1.0, 0.5});
    checks.push_back({"z2_positive", z2.real() > 0.0 ? 0.0 : 1.0, 0.5});
    checks.push_back({"psi_z1_is_q", std::abs(psi(o.p, o.q, z1) - o.q), 1e-12});
    checks.push_back({"psi_z2_is_p", std::abs(psi(o.p, o.q, z2) - o.p), 1e-12});
  } else if (o.map == "moebius") {
    const MoebiusImage image = moebius_image_circle(o.p);
    const auto& disk = std::get<ExcludedDisk>(image.domain.excluded);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Complex w = disk.center + std::polar(disk.radius * (1.0 + 10.0 * unit(rng)) + 1e-3, 2.0 * kPi * unit(rng));
      worst = std::max(worst, std::abs(image.f.eval(image.inverse(w)) - w) / std::max(1.0, std::abs(w)));
    }
    checks.push_back({"inverse_round_trip", worst, 1e-12});
    checks.push_back({"origin_outside_excluded_disk", std::abs(disk.center) > disk.radius ? 0.0 : 1.0, 0.5});
  } else {
    throw UsageError{"map-verify supports koebe, omega, zeta, two-slit, psi, moebius; got '" + o.map + "'"};
  }
  return checks;
}

std::pair<std::string, bool> map_verify(const Options& o, const NumericSettings& s) {
  std::mt19937_64 rng(o.seed);
  const auto checks = verify_map(o, s, rng);
  bool all = true;
  for (const auto& c : checks) all = all && c.passed();
  if (o.format == "csv") {
    std::string out = "check,value,tolerance,passed\n";
    for (const auto& c : checks) {
      out += c.name + "," + g17(c.value) + "," + g17(c.tolerance) + "," + (c.passed() ? "true" : "false") + "\n";
    }
    return {out, all};
  }
  ordered list = ordered::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
  }
  ordered j;
  j["map"] = o.map;
  j["seed"] = o.seed;
  j["checks"] = list;
  j["passed"] = all;
  return {j.dump(2) + "\n", all};
}

// lab commands

std::string seminorm(const Options& o, const NumericSettings& s) {
  const FunctionHandle f = make_function(o.fn, function_args(o));
  const SeminormEstimate est = bloch_seminorm(f, grid_of(o), s);
  if (o.format == "csv") {
    return "value,argmax_re,argmax_im,truncated\n" + g17(est.value) + "," + g17(est.argmax.real()) + "," +
           g17(est.argmax.imag()) + "," + (est.truncated ? "true" : "false") + "\n";
  }
  return seminorm_to_json(est, f.label);
}

std::string divergence(const Options& o, const NumericSettings& s) {
  const FunctionHandle f = make_function(o.fn, function_args(o));
  const DivergenceProfile profile = divergence_profile(f, o.depth, s);
  return o.format == "csv" ? divergence_to_csv(profile) : divergence_to_json(profile, f.label);
}

std::string radius(const Options& o, const NumericSettings& s) {
  if (o.format == "csv") csv_unsupported(o.command);
  const FunctionHandle f = make_function(o.fn, function_args(o));
  return radius_report_to_json(bloch_lower_bound(f, grid_of(o), s));
}

std::string refute(const Options& o, const NumericSettings& s) {
  if (o.format == "csv") csv_unsupported(o.command);
  return refutation_to_json(refutation_report(o.p, o.target, s, o.seed), o.p);
}

std::string two_pole(const Options& o, const NumericSettings& s) {
  if (o.format == "csv") csv_unsupported(o.command);
  return two_pole_to_json(two_pole_report(o.p, mu_of(o), o.target, s));
}

std::string constants(const Options& o) {
  const ConstantsTable table = classical_constants();
  if (o.format != "csv") return constants_to_json(table);
  std::string out = "name,lower,upper,lower_text,upper_text\n";
  for (const auto& e : table.entries) {
    out += e.name + "," + g17(e.lower) + "," + (e.upper ? g17(*e.upper) : std::string()) + "," + e.lower_text + "," +
           e.upper_text + "\n";
  }
  return out;
}

}  // namespace

std::pair<std::string, bool> run_command(const Options& o, const NumericSettings& s) {
  if (o.command == "map-eval") return {map_eval(o, s), true};
  if (o.command == "map-verify") return map_verify(o, s);
  if (o.command == "seminorm") return {seminorm(o, s), true};
  if (o.command == "divergence") return {divergence(o, s), true};
  if (o.command == "radius") return {radius(o, s), true};
  if (o.command == "refute") return {refute(o, s), true};
  if (o.command == "two-pole") return {two_pole(o, s), true};
  if (o.command == "constants") return {constants(o), true};
  throw UsageError{"unknown command '" + o.command + "'"};
}

}  // namespace schlicht::cli
