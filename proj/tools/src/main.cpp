// schlicht: command-line front end for the conformal maps and radius lab.
//
// Exit codes: 0 success, 2 precondition/domain violation, 3 numeric
// non-convergence or a failed verification check, 64 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "registry.hpp"
#include "schlicht/errors.hpp"

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitUsage = 64;

using schlicht::cli::Options;

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  sub->add_option("--seed", o.seed, "Seed for random sample points");
}

void add_function_flags(CLI::App* sub, Options& o) {
  sub->add_option("--fn", o.fn, "Test function")->check(CLI::IsMember(schlicht::cli::function_names()));
  sub->add_option("--p", o.p, "Pole location on (0, 1)");
  sub->add_option("--mu-re", o.mu_re, "Second pole, real part");
  sub->add_option("--mu-im", o.mu_im, "Second pole, imaginary part");
}

void add_grid_flags(CLI::App* sub, Options& o) {
  sub->add_option("--grid-radial", o.grid_radial, "Radial sample count");
  sub->add_option("--grid-angular", o.grid_angular, "Angular sample count");
  sub->add_option("--refine", o.refine, "Local refinement passes");
  sub->add_option("--outer-radius", o.outer_radius, "Outermost sampled radius");
  sub->add_option("--pole-margin", o.pole_margin, "Minimum distance of samples from poles");
}

int write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(o.out, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Conformal maps, Bloch seminorms and radius reports for functions with poles"};
  app.require_subcommand(1);

  auto* map_eval = app.add_subcommand("map-eval", "Evaluate one map at one point");
  map_eval->add_option("--map", o.map, "koebe-plus, koebe-minus, inverse-koebe-plus, inverse-koebe-minus, xi, omega, "
                                       "eta, zeta, real-slit, real-slit-inverse, two-slit, two-slit-inverse, psi");
  map_eval->add_option("--z-re", o.z_re, "Argument, real part");
  map_eval->add_option("--z-im", o.z_im, "Argument, imaginary part");

  auto* map_verify = app.add_subcommand("map-verify", "Run the identity checks for one map family");
  map_verify->add_option("--map", o.map, "koebe, omega, zeta, two-slit, psi, moebius");

  for (auto* sub : {map_eval, map_verify}) {
    sub->add_option("--p", o.p, "Slit tip / first parameter");
    sub->add_option("--q", o.q, "Second parameter of psi");
    sub->add_option("--p1", o.p1, "Inner radius of the curve slit");
    sub->add_option("--x", o.x, "Radial slit parameter");
    sub->add_option("--theta", o.theta, "Angle");
  }

  auto* seminorm = app.add_subcommand("seminorm", "Bloch seminorm lower bound on a polar grid");
  add_function_flags(seminorm, o);
  add_grid_flags(seminorm, o);

  auto* divergence = app.add_subcommand("divergence", "(1 - t^2)|f'(t)| along t_k = 1 - 2^-k");
  add_function_flags(divergence, o);
  divergence->add_option("--depth", o.depth, "Number of points (<= 40)");

  auto* radius = app.add_subcommand("radius", "Certified Bloch radius lower bound");
  add_function_flags(radius, o);
  add_grid_flags(radius, o);

  auto* refute = app.add_subcommand("refute", "Witness disk against the conjectured finite bound");
  refute->add_option("--p", o.p, "Pole location on (0, 1)");
  refute->add_option("--target", o.target, "Witness radius");

  auto* two_pole = app.add_subcommand("two-pole", "Two-pole construction through the two-slit map");
  two_pole->add_option("--p", o.p, "First pole on (0, 1)");
  two_pole->add_option("--mu-re", o.mu_re, "Second pole, real part");
  two_pole->add_option("--mu-im", o.mu_im, "Second pole, imaginary part");
  two_pole->add_option("--target", o.target, "Radius the Bloch lower bound should reach");

  auto* constants = app.add_subcommand("constants", "Table of classical constants");

  for (auto* sub : {map_eval, map_verify, seminorm, divergence, radius, refute, two_pole, constants}) {
    add_output_flags(sub, o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    const auto [text, passed] = schlicht::cli::run_command(o, schlicht::settings_from_environment());
    const int status = write_output(o, text);
    if (status != 0) return status;
    return passed ? 0 : kExitNumeric;
  } catch (const schlicht::cli::UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const schlicht::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const schlicht::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const schlicht::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
