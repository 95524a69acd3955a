#pragma once

#include <cstddef>

namespace schlicht {

// Every tolerance used by the library lives here so that callers can tune
// a run from one place. Defaults are the values the test suites are pinned to.
struct NumericSettings {
  // Koebe maps
  double koebe_pole_tol = 1e-14;  // |1 + u z| below this is a pole hit
  // |Im(u w)| <= cut_tol * max(1, |u w|) with Re(u w) >= 1/4 counts as on the
  // omitted ray. Points at t = 1 - 1e-8 sit only ~1e-13 off the ray, so this
  // stays at roundoff level.
  double cut_tol = 1e-15;

  // Boundary correspondences are radial limits at t = 1 - boundary_gap.
  double boundary_gap = 1e-8;
  double radial_limit_tol = 1e-6;

  // Two-slit inversion
  int newton_max_iter = 60;
  double newton_tol = 1e-12;
  int seed_grid = 32;      // seed_grid x seed_grid polar seeds
  int seed_candidates = 8;  // nearest seeds tried before giving up

  // Curve slit polyline
  std::size_t curve_samples = 512;
  double curve_end_gap = 1e-6;

  // Slits are measure zero; points within this band count as boundary.
  double slit_band = 1e-9;

  // Generic evaluation tolerance (round trips, verification suites).
  double eval_tol = 1e-10;

  // Winding numbers
  double contour_hit_tol = 1e-10;
  double contour_pole_clearance = 1e-6;
  std::size_t winding_initial_arcs = 64;
  std::size_t winding_sample_budget = 1u << 20;

  // Inscribed disks
  int inscribed_grid = 200;
  int inscribed_refine_passes = 2;
  int inscribed_refine_factor = 10;
  double witness_shrink = 1e-8;  // keeps the witness ring clear of slit_band

  // Reports never carry values above this; larger ones are saturated.
  double overflow_cap = 1e15;
};

/// Defaults, with eval_tol taken from SCHLICHT_SCOPE_TOL when set and valid.
NumericSettings settings_from_environment();

}  // namespace schlicht
