#include "schlicht/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schlicht/errors.hpp"

namespace schlicht {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double segment_distance(Complex w, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(w - a);
  const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

double polyline_distance(Complex w, const std::vector<Complex>& pts) {
  if (pts.size() == 1) return std::abs(w - pts.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) best = std::min(best, segment_distance(w, pts[i], pts[i + 1]));
  return best;
}

double polygon_edge_distance(Complex w, const std::vector<Complex>& v) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, segment_distance(w, v[i], v[(i + 1) % v.size()]));
  return best;
}

bool inside_polygon(Complex w, const std::vector<Complex>& v) {
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const bool crosses = (v[i].imag() > w.imag()) != (v[j].imag() > w.imag());
    if (crosses) {
      const double x = v[j].real() + (w.imag() - v[j].imag()) * (v[i].real() - v[j].real()) / (v[i].imag() - v[j].imag());
      if (w.real() < x) inside = !inside;
    }
  }
  return inside;
}

// Raw distance to the boundary, no membership test.
double raw_distance(const Domain& domain, Complex w) {
  return std::visit(
      overloaded{
          [&](const SlitDiskDomain& d) {
            double best = 1.0 - std::abs(w);
            for (const auto& s : d.radial_slits) best = std::min(best, segment_distance(w, s.start(), s.end()));
            for (const auto& c : d.curve_slits) best = std::min(best, polyline_distance(w, c.samples));
            return best;
          },
          [&](const HalfPlane& h) { return w.real() - h.edge(); },
          [&](const ExteriorDomain& e) {
            return std::visit(overloaded{[&](const ExcludedDisk& disk) { return std::abs(w - disk.center) - disk.radius; },
                                         [&](const ExcludedPolygon& poly) {
                                           const double d = polygon_edge_distance(w, poly.vertices);
                                           return inside_polygon(w, poly.vertices) ? -d : d;
                                         }},
                              e.excluded);
          }},
      domain);
}

}  // namespace

CurveSlit CurveSlit::from(const TwoSlitParams& params) { return {params.curve, params}; }

SlitDiskDomain SlitDiskDomain::omega_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("omega_p: p must lie in (0, 1)");
  return {{RadialSlit{0.0, p}}, {}};
}

SlitDiskDomain SlitDiskDomain::radial(double x, double theta) {
  if (!(x > 0.0 && x < 1.0)) throw PreconditionError("radial slit: x must lie in (0, 1)");
  return {{RadialSlit{theta, x}}, {}};
}

SlitDiskDomain SlitDiskDomain::two_slit(const TwoSlitParams& params) {
  return {{RadialSlit{0.0, params.p}}, {CurveSlit::from(params)}};
}

void validate(const Domain& domain) {
  std::visit(overloaded{[](const SlitDiskDomain& d) {
                          if (d.radial_slits.size() + d.curve_slits.size() > 2) {
                            throw PreconditionError("slit disk: at most two slits are supported");
                          }
                          for (const auto& s : d.radial_slits) {
                            if (!(s.inner > 0.0 && s.inner < 1.0)) {
                              throw PreconditionError("slit disk: radial slit inner radius must lie in (0, 1)");
                            }
                          }
                          for (const auto& c : d.curve_slits) {
                            if (c.samples.empty()) throw PreconditionError("slit disk: empty curve slit");
                          }
                        },
                        [](const HalfPlane& h) {
                          if (!(h.alpha > 1.0 && h.alpha <= 2.0)) {
                            throw PreconditionError("half plane: alpha must lie in (1, 2]");
                          }
                        },
                        [](const ExteriorDomain& e) {
                          std::visit(overloaded{[](const ExcludedDisk& disk) {
                                                  if (!(disk.radius > 0.0)) {
                                                    throw PreconditionError("exterior: excluded disk radius must be positive");
                                                  }
                                                },
                                                [](const ExcludedPolygon& poly) {
                                                  if (poly.vertices.size() < 3) {
                                                    throw PreconditionError("exterior: polygon needs at least 3 vertices");
                                                  }
                                                }},
                                     e.excluded);
                        }},
             domain);
}

bool contains(const Domain& domain, Complex w, const NumericSettings& settings) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
  return raw_distance(domain, w) > settings.slit_band;
}

double boundary_distance(const Domain& domain, Complex w, const NumericSettings& settings) {
  if (!contains(domain, w, settings)) {
    throw DomainError("boundary_distance: point is not in the domain");
  }
  return raw_distance(domain, w);
}

std::vector<Complex> witness_samples(const DiskWitness& witness) {
  std::vector<Complex> pts;
  pts.reserve(96);
  for (int k = 0; k < 64; ++k) {
    pts.push_back(witness.center + std::polar(witness.radius, 2.0 * kPi * k / 64.0));
  }
  for (int ring = 1; ring <= 4; ++ring) {
    const double frac = 0.2 * ring;
    for (int k = 0; k < 8; ++k) {
      const double angle = 2.0 * kPi * (k + 0.5 * (ring % 2)) / 8.0;
      pts.push_back(witness.center + std::polar(frac * witness.radius, angle));
    }
  }
  return pts;
}

bool verify_witness(const Domain& domain, const DiskWitness& witness, const NumericSettings& settings) {
  if (!(witness.radius > 0.0)) return false;
  if (!contains(domain, witness.center, settings)) return false;
  const auto pts = witness_samples(witness);
  return std::all_of(pts.begin(), pts.end(), [&](Complex w) { return contains(domain, w, settings); });
}

LargestDisk largest_disk(const Domain& domain, const NumericSettings& settings) {
  if (!std::holds_alternative<SlitDiskDomain>(domain)) return Unbounded{};

  const int n = std::max(settings.inscribed_grid, 2);
  double h = 2.0 / n;
  Complex best_center(0.0, 0.0);
  double best = -1.0;
  auto consider = [&](Complex c) {
    if (!contains(domain, c, settings)) return;
    const double d = raw_distance(domain, c);
    if (d > best) {
      best = d;
      best_center = c;
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) consider(Complex(-1.0 + i * h, -1.0 + j * h));
  }
  if (best < 0.0) throw InvariantError("largest_disk: no grid point lies in the domain");

  const int factor = std::max(settings.inscribed_refine_factor, 2);
  for (int pass = 0; pass < settings.inscribed_refine_passes; ++pass) {
    const Complex anchor = best_center;
    const double fine = h / factor;
    for (int i = -factor; i <= factor; ++i) {
      for (int j = -factor; j <= factor; ++j) consider(anchor + Complex(i * fine, j * fine));
    }
    h = fine;
  }

  DiskWitness witness{best_center, best - settings.witness_shrink, false};
  while (witness.radius > 0.0 && !verify_witness(domain, witness, settings)) {
    witness.radius -= 10.0 * settings.witness_shrink;
  }
  if (!(witness.radius > 0.0)) throw InvariantError("largest_disk: witness failed verification");
  return witness;
}

DiskWitness witness_disk(const Domain& domain, double radius, const NumericSettings& settings) {
  if (!(radius > 0.0)) throw PreconditionError("witness_disk: radius must be positive");
  const DiskWitness witness = std::visit(
      overloaded{[](const SlitDiskDomain&) -> DiskWitness {
                   throw PreconditionError("witness_disk: slit disks are bounded; use largest_disk");
                 },
                 [&](const HalfPlane& h) {
                   return DiskWitness{Complex(h.edge() + radius + 1.0, 0.0), radius, false};
                 },
                 [&](const ExteriorDomain& e) {
                   return std::visit(
                       overloaded{[&](const ExcludedDisk& disk) {
                                    return DiskWitness{disk.center + (disk.radius + radius + 1.0), radius, false};
                                  },
                                  [&](const ExcludedPolygon& poly) {
                                    Complex centroid(0.0, 0.0);
                                    for (const auto& v : poly.vertices) centroid += v;
                                    centroid /= static_cast<double>(poly.vertices.size());
                                    double diameter = 0.0;
                                    for (const auto& a : poly.vertices) {
                                      for (const auto& b : poly.vertices) diameter = std::max(diameter, std::abs(a - b));
                                    }
                                    return DiskWitness{centroid + (diameter + radius + 1.0), radius, false};
                                  }},
                       e.excluded);
                 }},
      domain);
  if (!verify_witness(domain, witness, settings)) {
    throw InvariantError("witness_disk: constructed witness failed membership verification");
  }
  return witness;
}

std::pair<double, double> koebe_covering(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("koebe_covering: p must lie in (0, 1)");
  return {p / ((1.0 + p) * (1.0 + p)), p / ((1.0 - p) * (1.0 - p))};
}

ExteriorDomain koebe_exterior(double p) {
  return {ExcludedDisk{Complex(0.0, 0.0), koebe_covering(p).second}};
}

std::string kind_name(const Domain& domain) {
  return std::visit(overloaded{[](const SlitDiskDomain&) { return std::string("slit_disk"); },
                               [](const HalfPlane&) { return std::string("half_plane"); },
                               [](const ExteriorDomain&) { return std::string("exterior"); }},
                    domain);
}

}  // namespace schlicht
