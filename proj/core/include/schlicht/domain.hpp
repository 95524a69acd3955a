#pragma once

// Planar domains: slit disks, half-planes and complements of compacta, with
// membership, boundary distance and inscribed / witness disk queries.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schlicht/conformal.hpp"

namespace schlicht {

/// { t e^{i angle} : inner <= t < 1 }.
struct RadialSlit {
  double angle = 0.0;
  double inner = 0.0;

  Complex start() const { return std::polar(inner, angle); }
  Complex end() const { return std::polar(1.0, angle); }
};

/// Polyline approximation of C(p1, theta) = { -K(r k(t e^{i theta})) : p1 <= t < 1 }.
struct CurveSlit {
  std::vector<Complex> samples;
  TwoSlitParams params;

  static CurveSlit from(const TwoSlitParams& params);
};

struct SlitDiskDomain {
  std::vector<RadialSlit> radial_slits;
  std::vector<CurveSlit> curve_slits;

  /// Omega_p = D minus [p, 1).
  static SlitDiskDomain omega_p(double p);
  /// D minus L(x, theta).
  static SlitDiskDomain radial(double x, double theta);
  /// Omega(p, p1, theta) = D minus ([p, 1) and C(p1, theta)).
  static SlitDiskDomain two_slit(const TwoSlitParams& params);
};

/// { w : Re w > -1/(2 alpha) }, alpha in (1, 2].
struct HalfPlane {
  double alpha = 2.0;

  double edge() const { return -0.5 / alpha; }
};

struct ExcludedDisk {
  Complex center;
  double radius = 0.0;
};

/// Closed filled polygon (vertices in order, either orientation).
struct ExcludedPolygon {
  std::vector<Complex> vertices;
};

/// Complement of a compact connected set.
struct ExteriorDomain {
  std::variant<ExcludedDisk, ExcludedPolygon> excluded;
};

using Domain = std::variant<SlitDiskDomain, HalfPlane, ExteriorDomain>;

struct DiskWitness {
  Complex center;
  double radius = 0.0;
  bool schlicht = false;
};

struct Unbounded {};

using LargestDisk = std::variant<Unbounded, DiskWitness>;

/// Throws PreconditionError when the domain's parameters are out of range.
void validate(const Domain& domain);

/// Open-domain membership; points within slit_band of any boundary piece are outside.
bool contains(const Domain& domain, Complex w, const NumericSettings& settings = {});

/// Distance from w to the boundary of the domain. Throws DomainError if w is not in it.
double boundary_distance(const Domain& domain, Complex w, const NumericSettings& settings = {});

/// Half-planes and exteriors are Unbounded by construction. Slit disks get a
/// grid search with local refinement and a witness shrunk to stay clear of the
/// boundary band; the witness always passes verify_witness.
LargestDisk largest_disk(const Domain& domain, const NumericSettings& settings = {});

/// A disk of radius R inside an unbounded domain.
DiskWitness witness_disk(const Domain& domain, double radius, const NumericSettings& settings = {});

/// Checks a 64-point ring at the witness radius plus 32 interior samples.
bool verify_witness(const Domain& domain, const DiskWitness& witness, const NumericSettings& settings = {});

/// The deterministic sample points used by verify_witness.
std::vector<Complex> witness_samples(const DiskWitness& witness);

/// (p/(1+p)^2, p/(1-p)^2): the covering disk and the exterior neighbourhood of
/// infinity contained in f(D) for univalent f with a pole at p.
std::pair<double, double> koebe_covering(double p);

/// Exterior of the outer Koebe covering circle, D_2 = { |w| > p/(1-p)^2 }.
ExteriorDomain koebe_exterior(double p);

std::string kind_name(const Domain& domain);

}  // namespace schlicht
