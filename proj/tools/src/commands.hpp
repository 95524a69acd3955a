#pragma once

#include <cstdint>
#include <string>

#include "schlicht/settings.hpp"

namespace schlicht::cli {

struct Options {
  std::string command;
  std::string map = "koebe-plus";
  std::string fn = "z-over-1-minus-z";
  double p = 0.5;
  double q = 0.6;
  double p1 = 1.0 / 3.0;
  double x = 0.5;
  double theta = 1.5707963267948966;
  double mu_re = 0.0;
  double mu_im = 1.0 / 3.0;
  double z_re = 0.0;
  double z_im = 0.0;
  int depth = 20;
  double target = 1000.0;
  int grid_radial = 64;
  int grid_angular = 128;
  int refine = 3;
  double outer_radius = 0.99;
  double pole_margin = 1e-4;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 42;
};

/// Thrown for flag combinations that parse but make no sense (exit 64).
struct UsageError {
  std::string message;
};

/// Runs one command and returns the text to emit. The bool is false when a
/// verification command completed but one of its checks failed.
std::pair<std::string, bool> run_command(const Options& options, const NumericSettings& settings);

}  // namespace schlicht::cli
