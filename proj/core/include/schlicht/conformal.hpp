#pragma once

// Explicit conformal maps of the unit disk: rotated Koebe functions and their
// principal inverses, the radial slit map, the real-axis slit map eta and its
// inverse zeta, the two-slit composition h with its inverse H, and the disk
// automorphism psi used to separate collinear poles.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "schlicht/settings.hpp"

namespace schlicht {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A unimodular rotation parameter u selecting k_u(z) = z / (1 + u z)^2.
class UnitRotation {
 public:
  explicit UnitRotation(Complex u);

  static UnitRotation plus() { return UnitRotation(Complex(1.0, 0.0)); }
  static UnitRotation minus() { return UnitRotation(Complex(-1.0, 0.0)); }

  Complex value() const { return u_; }

 private:
  Complex u_;
};

Complex koebe(UnitRotation u, Complex z, const NumericSettings& settings = {});
Complex koebe_derivative(UnitRotation u, Complex z, const NumericSettings& settings = {});

/// Branch of k_u^{-1} fixing the origin with unit derivative there.
///
/// Defined on the plane minus the ray u*w in [1/4, oo). Evaluated through
/// s = 4v / (1 + sqrt(1 - 4v))^2 with v = u w, which is the small root of the
/// Koebe quadratic written without the removable 0/0 at v = 0.
Complex inverse_koebe(UnitRotation u, Complex w, const NumericSettings& settings = {});

/// Limit of approach(s) as s -> 0+ for a path that is analytic in sqrt(s).
///
/// Samples s = gap * 4^k for k = 0..levels-1 (the closest sample is at gap)
/// and extrapolates the polynomial in sqrt(s) to 0. Square-root behaviour at
/// slit tips and at corners of slit domains is removed by the extrapolation.
Complex radial_limit(const std::function<Complex(double)>& approach, double gap = 1e-8, int levels = 6);

/// Radial boundary value lim_{t -> 1-} f(t * point).
Complex boundary_value(const std::function<Complex(Complex)>& f, Complex point,
                       const NumericSettings& settings = {});

/// rho(x) = 4x / (1 + x)^2 for x in (0, 1].
double rho(double x);

/// Boundary preimage of -1 under the radial slit map with parameters (rho, theta).
Complex xi(double rho_val, double theta);

/// Parameters of the radial slit L(x, theta) = { t e^{i theta} : x <= t < 1 }.
struct SlitParams {
  double x = 0.0;
  double theta = 0.0;
  double rho = 0.0;
  Complex xi;

  /// Validates the ranges and checks that the slit map sends xi to -1 as a
  /// radial limit. Throws InvariantError when the check fails (this happens
  /// for theta in (pi, 2 pi), where the conjugate point is the true preimage).
  static SlitParams make(double x, double theta, const NumericSettings& settings = {});
};

/// omega(z) = -e^{i theta} K_-(rho k_-(z)), mapping D onto D minus L(x, theta).
Complex omega_slit(const SlitParams& params, Complex z, const NumericSettings& settings = {});
Complex omega_slit_derivative(const SlitParams& params, Complex z,
                              const NumericSettings& settings = {});

/// eta(z) = K_+(r k_+(z)), r = rho(p): D onto Omega_p = D minus [p, 1).
Complex eta(double p, Complex z, const NumericSettings& settings = {});
Complex eta_derivative(double p, Complex z, const NumericSettings& settings = {});

/// Inverse of eta on Omega_p.
Complex zeta(double p, Complex w, const NumericSettings& settings = {});
Complex zeta_derivative(double p, Complex w, const NumericSettings& settings = {});

/// w -> -K_-(r k_-(w)), the form of the real-axis slit map used inside h.
Complex real_slit_map(double p, Complex w, const NumericSettings& settings = {});
Complex real_slit_map_derivative(double p, Complex w, const NumericSettings& settings = {});
/// Closed-form inverse of real_slit_map on D minus [p, 1).
Complex real_slit_inverse(double p, Complex v, const NumericSettings& settings = {});

struct SeedPoint {
  Complex z;
  Complex image;
};

/// Parameters of h(z) = -K_-(r k_-(omega_{r1}(z))), mapping D onto
/// Omega(p, p1, theta) = D minus ([p, 1) and the curve C(p1, theta)).
struct TwoSlitParams {
  double p = 0.0;
  double p1 = 0.0;
  double theta = 0.0;
  double r = 0.0;
  double r1 = 0.0;
  Complex anchor;  // q e^{i phi}: tip of the curve slit, image of z = -1
  Complex xi1;     // xi(r1, theta): preimage of p
  SlitParams inner;

  // Polyline of C(p1, theta) from the anchor to its landing point, which lies
  // on the unit circle or, for larger theta, on [p, 1).
  std::vector<Complex> curve;
  // Coarse polar grid of (z, h(z)) pairs used to seed the inverse.
  std::vector<SeedPoint> seeds;

  static TwoSlitParams make(double p, double p1, double theta,
                            const NumericSettings& settings = {});
};

Complex two_slit_map(const TwoSlitParams& params, Complex z, const NumericSettings& settings = {});
Complex two_slit_derivative(const TwoSlitParams& params, Complex z,
                            const NumericSettings& settings = {});

/// Points of C(p1, theta) for t in [p1, 1 - curve_end_gap], geometrically clustered toward 1.
std::vector<Complex> curve_slit_samples(double p, double p1, double theta,
                                        const NumericSettings& settings = {});

/// True when w lies in Omega(p, p1, theta), using the slit_band exclusion.
bool in_two_slit_domain(const TwoSlitParams& params, Complex w, const NumericSettings& settings = {});

/// H = h^{-1} by damped Newton iteration seeded from the nearest visible grid image.
Complex two_slit_inverse(const TwoSlitParams& params, Complex w, const NumericSettings& settings = {});

/// Fractional linear map z -> (a z + b) / (c z + d).
class MoebiusMap {
 public:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d);

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;

  /// (*this) o inner, i.e. z -> this(inner(z)).
  MoebiusMap compose(const MoebiusMap& inner) const;
  MoebiusMap inverse() const;

  Complex determinant() const { return a_ * d_ - b_ * c_; }
  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  /// Same map up to a common nonzero scalar on the coefficients.
  bool equivalent(const MoebiusMap& other, double tol = 1e-12) const;

 private:
  Complex a_, b_, c_, d_;
};

/// psi(z) = (p + q - 2z) / (2 - (p + q) z), an involutive automorphism of D.
MoebiusMap psi(double p, double q);
Complex psi(double p, double q, Complex z);

/// (z1, z2) with psi(z1) = q and psi(z2) = p; z1 < 0 < z2.
std::pair<Complex, Complex> pole_preimages(double p, double q);

}  // namespace schlicht
