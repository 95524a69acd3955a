#pragma once

// Bloch seminorms, divergence profiles near boundary poles, certified lower
// bounds for Bloch/Landau radii, and the reports that compare witness disks
// against the conjectured finite values.

#include <cstdint>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/domain.hpp"
#include "schlicht/functions.hpp"

namespace schlicht {

/// Polar sampling of the disk. Radii are clustered toward outer_radius;
/// every declared pole also gets rings of samples from pole_margin outward.
struct GridSpec {
  int radial_count = 64;
  int angular_count = 128;
  int refine_depth = 3;
  double pole_margin = 1e-4;
  double outer_radius = 0.99;

  void validate() const;
};

struct SeminormEstimate {
  double value = 0.0;  // lower bound for sup (1 - |z|^2) |f'(z)|
  Complex argmax;
  bool truncated = false;  // incumbent on the outer ring or the innermost pole ring
};

SeminormEstimate bloch_seminorm(const FunctionHandle& f, const GridSpec& grid,
                                const NumericSettings& settings = {}, std::stop_token stop = {});

struct DivergencePoint {
  int k = 0;
  double t = 0.0;
  double value = 0.0;
};

struct DivergenceProfile {
  std::vector<DivergencePoint> points;
  double exponent = 0.0;  // slope of log(value) against log(1/(1-t))
  bool halted = false;    // stopped early at the overflow cap
};

/// (1 - t^2)|f'(t zeta0)| for t_k = 1 - 2^{-k}, k = 1..depth, along the radius
/// ending at the unit-modulus point zeta0.
DivergenceProfile radial_growth_profile(const FunctionHandle& f, Complex zeta0, int depth,
                                        const NumericSettings& settings = {});

/// Profile toward z = 1 for a function with a declared simple pole there.
DivergenceProfile divergence_profile(const FunctionHandle& f, int depth, const NumericSettings& settings = {});

/// Least-squares slope over the last ten points (or all, if fewer).
double fit_growth_exponent(const std::vector<DivergencePoint>& points);

enum class RadiusKind { bloch, landau };

struct InjectivityCertificate {
  int samples = 0;
  double max_round_trip = 0.0;  // max |f^{-1}(f(z)) - z| over the preimages
  bool passed = false;
};

struct RadiusReport {
  RadiusKind kind = RadiusKind::bloch;
  double lower_bound = 0.0;
  std::optional<DiskWitness> witness;
  double constant_used = 0.0;
  std::optional<double> conjectured_bound;
  std::string function_label;
  bool truncated = false;
  std::optional<InjectivityCertificate> certificate;
};

/// Lower endpoint of the Bloch constant used in every certified bound.
double bloch_constant_lower();
/// Lower endpoint of the Landau constant.
double landau_constant_lower();

/// c_B * max d(z)|f'(z)| with d(z) = min(1 - |z|, distance to the poles).
/// Requires f'(0) = 1.
RadiusReport bloch_lower_bound(const FunctionHandle& f, const GridSpec& grid,
                               const NumericSettings& settings = {}, std::stop_token stop = {});

/// f(z) = p z / (p - z) and its image, the exterior of a closed disk.
struct MoebiusImage {
  ExteriorDomain domain;
  FunctionHandle f;
  std::function<Complex(Complex)> inverse;  // w -> p w / (p + w)
};

MoebiusImage moebius_image_circle(double p);

/// Samples a witness disk, maps every sample back with the exact inverse and
/// checks it lands in D away from the pole with a round trip below tol.
InjectivityCertificate certify_injective(const MoebiusImage& image, const DiskWitness& witness, double tol,
                                         int samples = 128);

struct ConstantEntry {
  std::string name;
  std::string description;
  double lower = 0.0;
  std::optional<double> upper;
  std::string lower_text;
  std::string upper_text;
  std::string lower_citation;
  std::string upper_citation;
};

struct ConstantsTable {
  std::vector<ConstantEntry> entries;

  const ConstantEntry& at(const std::string& name) const;
};

ConstantsTable classical_constants();

struct TheoremABounds {
  double bloch_bound = 0.0;
  double landau_bound = 0.0;
};

/// 4p|f'(0)| B / (1+p)^2 and 4p|f'(0)| L / (1+p)^2 with the lower endpoints
/// of B and L; these were conjectured to be the exact constants.
TheoremABounds theorem_A_bounds(double p, double fprime0 = 1.0);

struct FactorizationCheck {
  int disks = 0;
  int passed = 0;
  double scale = 0.0;  // 4p / (1+p)^2
  bool ok() const { return disks > 0 && disks == passed; }
};

/// Draws random witness disks in g(D) for g = f o eta / scale and checks that
/// the scaled disks lie in f(Omega_p).
FactorizationCheck check_factorization(double p, int disks, std::uint64_t seed = 42,
                                       const NumericSettings& settings = {});

struct RefutationReport {
  RadiusReport radius;
  double ratio = 0.0;  // witness radius / conjectured Bloch bound
  FactorizationCheck factorization;
};

/// The factorization check draws its disks from `seed`.
RefutationReport refutation_report(double p, double target, const NumericSettings& settings = {},
                                   std::uint64_t seed = 42);

struct LimitCheck {
  Complex value;
  Complex expected;
  double error = 0.0;
};

struct TwoPoleReport {
  int case_number = 1;  // 1: poles on different rays, 2: same ray (reduced via psi)
  double p = 0.0;
  Complex mu;

  // Case 2 reduction
  std::optional<std::pair<Complex, Complex>> preimages;  // (z1, z2)

  // Poles on opposite rays are first moved off the common line.
  bool tilted = false;
  // Configuration reflected through the real axis so the slit angle lies in (0, pi).
  bool reflected = false;

  // Poles in the frame where the two-slit map is built: p_eff on (0, 1), mu_eff elsewhere.
  double p_eff = 0.0;
  Complex mu_eff;
  double p1 = 0.0;
  double theta = 0.0;
  Complex anchor;
  Complex xi1;

  LimitCheck h_at_minus_one;  // h(-1) = anchor
  LimitCheck h_at_xi;         // h(xi1) = p_eff
  LimitCheck H_at_p;          // H(p_eff) = xi1
  LimitCheck H_at_anchor;     // H(anchor) = -1

  bool pole_free = false;  // g has no poles in |z| <= 1 - 1e-4
  DivergenceProfile growth;  // toward -1
  RadiusReport radius;
};

TwoPoleReport two_pole_report(double p, Complex mu, double target, const NumericSettings& settings = {});

}  // namespace schlicht
