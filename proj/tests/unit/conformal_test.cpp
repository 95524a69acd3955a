#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "schlicht/conformal.hpp"
#include "schlicht/errors.hpp"

using namespace schlicht;

namespace {

const UnitRotation kPlus(Complex(1.0, 0.0));
const UnitRotation kMinus(Complex(-1.0, 0.0));

double slit_distance(Complex w, double x, double theta) {
  return oracle::distance_to_segment(w, std::polar(x, theta), std::polar(1.0, theta));
}

}  // namespace

TEST(UnitRotation, RejectsNonUnitModulus) {
  EXPECT_THROW(UnitRotation(Complex(0.5, 0.0)), PreconditionError);
  EXPECT_NO_THROW(UnitRotation(std::polar(1.0, 0.7)));
}

TEST(Koebe, Examples) {
  EXPECT_EQ(koebe(kPlus, 0.0), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(koebe(kMinus, -1.0) - Complex(-0.25, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(koebe(kPlus, 0.3) - Complex(0.3 / 1.69, 0.0)), 0.0, 1e-15);
}

TEST(Koebe, PoleOfMap) {
  EXPECT_THROW(koebe(kPlus, -1.0), PoleError);
  EXPECT_THROW(koebe_derivative(kMinus, 1.0), PoleError);
}

TEST(Koebe, DerivativeMatchesFiniteDifference) {
  for (const Complex z : {Complex(0.1, 0.2), Complex(-0.5, 0.3), Complex(0.7, -0.1)}) {
    const auto fd = oracle::derivative([](Complex s) { return oracle::koebe(1.0, s); }, z);
    EXPECT_NEAR(std::abs(koebe_derivative(kPlus, z) - fd), 0.0, 1e-9);
  }
}

TEST(InverseKoebe, Examples) {
  EXPECT_EQ(inverse_koebe(kPlus, 0.0), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(inverse_koebe(kPlus, 0.25 - 1e-15) - 1.0), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(inverse_koebe(kMinus, -(8.0 / 9.0) / 4.0) - Complex(-0.5, 0.0)), 0.0, 1e-14);
}

TEST(InverseKoebe, RejectsOmittedRay) {
  EXPECT_THROW(inverse_koebe(kPlus, 0.25), DomainError);
  EXPECT_THROW(inverse_koebe(kPlus, 3.0), DomainError);
  EXPECT_THROW(inverse_koebe(kMinus, -1.0), DomainError);
  EXPECT_NO_THROW(inverse_koebe(kPlus, Complex(3.0, 1e-3)));
}

TEST(InverseKoebe, AgreesWithQuadraticRootOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (const Complex u : {Complex(1.0, 0.0), Complex(-1.0, 0.0), std::polar(1.0, kPi / 3.0)}) {
    for (int i = 0; i < 200; ++i) {
      const Complex w(coord(rng), coord(rng));
      const Complex v = u * w;
      if (v.real() >= 0.25 && std::abs(v.imag()) < 1e-3) continue;
      EXPECT_NEAR(std::abs(inverse_koebe(UnitRotation(u), w) - oracle::inverse_koebe(u, w)), 0.0, 1e-12);
    }
  }
}

TEST(InverseKoebe, SmallArgumentsStayAccurate) {
  for (const double m : {1e-3, 1e-5, 1e-9, 1e-14, 1e-200}) {
    const Complex z = std::polar(m, 0.4);
    EXPECT_NEAR(std::abs(inverse_koebe(kPlus, koebe(kPlus, z)) - z) / m, 0.0, 1e-13);
  }
}

TEST(Rho, Examples) {
  EXPECT_DOUBLE_EQ(rho(1.0), 1.0);
  EXPECT_NEAR(rho(0.5), 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(rho(0.1), 0.4 / 1.21, 1e-15);
  EXPECT_THROW(rho(0.0), DomainError);
  EXPECT_THROW(rho(1.5), DomainError);
}

TEST(Xi, Examples) {
  EXPECT_NEAR(std::abs(xi(1.0, kPi) - Complex(-1.0, 0.0)), 0.0, 1e-15);
  const Complex expected(-7.0 / 9.0, -8.0 / (9.0 * std::sqrt(2.0)));
  EXPECT_NEAR(std::abs(xi(8.0 / 9.0, kPi) - expected), 0.0, 1e-15);
  EXPECT_THROW(xi(0.5, 0.0), PreconditionError);
  EXPECT_THROW(xi(0.5, 2.0 * kPi), PreconditionError);
}

TEST(Xi, OnUnitCircle) {
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 62; ++j) {
      EXPECT_NEAR(std::abs(xi(0.05 * i, 0.1 * j)), 1.0, 1e-12);
    }
  }
}

TEST(RadialLimit, ExtrapolatesSquareRootApproach) {
  const Complex limit = radial_limit([](double s) { return Complex(1.0 + 3.0 * std::sqrt(s) + s, 0.0); });
  EXPECT_NEAR(std::abs(limit - 1.0), 0.0, 1e-12);
}

TEST(OmegaSlit, Normalization) {
  const SlitParams params = SlitParams::make(0.5, kPi / 2.0);
  EXPECT_EQ(omega_slit(params, 0.0), Complex(0.0, 0.0));
  const Complex expected = -std::polar(1.0, params.theta) * params.rho;
  EXPECT_NEAR(std::abs(omega_slit_derivative(params, 0.0) - expected), 0.0, 1e-14);
}

TEST(OmegaSlit, BoundaryCorrespondence) {
  for (const double x : {0.2, 0.5, 0.8}) {
    for (const double theta : {kPi / 4.0, kPi / 2.0, kPi}) {
      const SlitParams params = SlitParams::make(x, theta);
      auto omega = [&](Complex z) { return omega_slit(params, z); };
      EXPECT_LT(std::abs(boundary_value(omega, -1.0) - std::polar(x, theta)), 1e-6) << x << " " << theta;
      EXPECT_LT(std::abs(boundary_value(omega, params.xi) + 1.0), 1e-6) << x << " " << theta;
    }
  }
}

TEST(OmegaSlit, ImageOfMinusOne) {
  const SlitParams params = SlitParams::make(0.5, kPi / 2.0);
  auto omega = [&](Complex z) { return omega_slit(params, z); };
  EXPECT_NEAR(std::abs(boundary_value(omega, -1.0) - Complex(0.0, 0.5)), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(params.xi - xi(8.0 / 9.0, kPi / 2.0)), 0.0, 1e-15);
}

TEST(OmegaSlit, ImageContainment) {
  for (const double x : {0.2, 0.5, 0.8}) {
    const double theta = 2.0;
    const SlitParams params = SlitParams::make(x, theta);
    for (int i = 0; i < 60; ++i) {
      for (int j = 0; j < 60; ++j) {
        const Complex z = std::polar(0.95 * i / 59.0, 2.0 * kPi * j / 60.0);
        const Complex w = omega_slit(params, z);
        EXPECT_LT(std::abs(w), 1.0);
        EXPECT_GT(slit_distance(w, x, theta), 0.0);
      }
    }
  }
}

TEST(SlitParams, RejectsAnglesWhereXiIsNotThePreimage) {
  EXPECT_THROW(SlitParams::make(0.5, 4.0), InvariantError);
  EXPECT_THROW(SlitParams::make(0.5, 0.0), PreconditionError);
  EXPECT_THROW(SlitParams::make(1.5, 1.0), PreconditionError);
}

TEST(EtaZeta, Examples) {
  EXPECT_EQ(eta(0.5, 0.0), Complex(0.0, 0.0));
  EXPECT_EQ(zeta(0.5, 0.0), Complex(0.0, 0.0));
  auto eta_half = [](Complex z) { return eta(0.5, z); };
  EXPECT_NEAR(std::abs(oracle::derivative(eta_half, 0.0) - 8.0 / 9.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(boundary_value(eta_half, 1.0) - 0.5), 0.0, 1e-6);
  auto zeta_half = [](Complex w) { return zeta(0.5, w); };
  EXPECT_NEAR(std::abs(oracle::derivative(zeta_half, 0.0) - 1.125), 0.0, 1e-8);
}

TEST(EtaZeta, DerivativeNormalization) {
  for (int i = 1; i <= 9; ++i) {
    const double p = 0.1 * i;
    auto eta_p = [p](Complex z) { return eta(p, z); };
    auto zeta_p = [p](Complex w) { return zeta(p, w); };
    EXPECT_NEAR(std::abs(oracle::derivative(eta_p, 0.0) - rho(p)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(oracle::derivative(zeta_p, 0.0) - (1.0 + p) * (1.0 + p) / (4.0 * p)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(zeta_derivative(p, 0.0) - (1.0 + p) * (1.0 + p) / (4.0 * p)), 0.0, 1e-12);
  }
}

TEST(EtaZeta, RoundTrip) {
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      const Complex z = std::polar(0.95 * i / 39.0, 2.0 * kPi * j / 40.0);
      worst = std::max(worst, std::abs(zeta(0.9, eta(0.9, z)) - z));
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(EtaZeta, ImageAvoidsSlit) {
  for (int i = 0; i < 60; ++i) {
    for (int j = 0; j < 60; ++j) {
      const Complex w = eta(0.5, std::polar(0.95 * i / 59.0, 2.0 * kPi * j / 60.0));
      EXPECT_LT(std::abs(w), 1.0);
      EXPECT_GT(oracle::distance_to_segment(w, 0.5, 1.0), 0.0);
    }
  }
}

TEST(EtaZeta, ZetaRejectsSlitAndExterior) {
  EXPECT_THROW(zeta(0.5, 0.75), DomainError);
  EXPECT_THROW(zeta(0.5, Complex(0.0, 1.5)), DomainError);
}

TEST(RealSlitMap, InverseIsClosedForm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Complex w = std::polar(0.95 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    EXPECT_NEAR(std::abs(real_slit_inverse(0.5, real_slit_map(0.5, w)) - w), 0.0, 1e-10);
  }
}

class TwoSlit : public ::testing::TestWithParam<std::tuple<double, double, double>> {};

TEST_P(TwoSlit, Normalization) {
  const auto [p, p1, theta] = GetParam();
  const TwoSlitParams params = TwoSlitParams::make(p, p1, theta);
  EXPECT_EQ(two_slit_map(params, 0.0), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(two_slit_derivative(params, 0.0)), params.r * params.r1, 1e-8);
  auto h = [&](Complex z) { return two_slit_map(params, z); };
  EXPECT_NEAR(std::abs(oracle::derivative(h, 0.0)), params.r * params.r1, 1e-8);
  EXPECT_NEAR(std::abs(params.xi1), 1.0, 1e-10);
  EXPECT_LT(std::abs(params.anchor), 1.0);
}

TEST_P(TwoSlit, BoundaryCorrespondence) {
  const auto [p, p1, theta] = GetParam();
  const TwoSlitParams params = TwoSlitParams::make(p, p1, theta);
  auto h = [&](Complex z) { return two_slit_map(params, z); };
  const Complex minus(-1.0, 0.0);
  const Complex expected_anchor = -inverse_koebe(kMinus, params.r * koebe(kMinus, std::polar(p1, theta)));
  EXPECT_NEAR(std::abs(params.anchor - expected_anchor), 0.0, 1e-14);
  EXPECT_LT(std::abs(boundary_value(h, minus) - params.anchor), 1e-6);
  EXPECT_LT(std::abs(boundary_value(h, params.xi1) - p), 1e-6);
}

TEST_P(TwoSlit, NewtonInverseMatchesClosedForm) {
  const auto [p, p1, theta] = GetParam();
  const TwoSlitParams params = TwoSlitParams::make(p, p1, theta);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z = std::polar(0.9 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    const Complex w = two_slit_map(params, z);
    const Complex newton = two_slit_inverse(params, w);
    EXPECT_NEAR(std::abs(newton - z), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(newton - oracle::two_slit_inverse(p, p1, theta, w)), 0.0, 1e-9);
  }
}

TEST_P(TwoSlit, InverseLimits) {
  const auto [p, p1, theta] = GetParam();
  const TwoSlitParams params = TwoSlitParams::make(p, p1, theta);
  auto H = [&](Complex w) { return two_slit_inverse(params, w); };
  EXPECT_LT(std::abs(radial_limit([&](double s) { return H(p - s); }) - params.xi1), 1e-6);
  EXPECT_LT(std::abs(radial_limit([&](double s) { return H(params.anchor * (1.0 - s)); }) + 1.0), 1e-6);
  EXPECT_LT(std::abs(H(p - 1e-6) - params.xi1), 1e-2);
}

TEST_P(TwoSlit, ImageAvoidsBothSlits) {
  const auto [p, p1, theta] = GetParam();
  const TwoSlitParams params = TwoSlitParams::make(p, p1, theta);
  for (int i = 0; i < 60; ++i) {
    for (int j = 0; j < 60; ++j) {
      const Complex w = two_slit_map(params, std::polar(0.95 * i / 59.0, 2.0 * kPi * j / 60.0));
      EXPECT_LT(std::abs(w), 1.0);
      EXPECT_TRUE(in_two_slit_domain(params, w));
    }
  }
}

TEST_P(TwoSlit, RejectsPointsOutsideDomain) {
  const auto [p, p1, theta] = GetParam();
  const TwoSlitParams params = TwoSlitParams::make(p, p1, theta);
  EXPECT_THROW(two_slit_inverse(params, (p + 1.0) / 2.0), DomainError);
  EXPECT_THROW(two_slit_inverse(params, Complex(0.0, 1.2)), DomainError);
  EXPECT_THROW(two_slit_inverse(params, params.curve[params.curve.size() / 2]), DomainError);
}

INSTANTIATE_TEST_SUITE_P(Params, TwoSlit,
                         ::testing::Values(std::make_tuple(0.5, 1.0 / 3.0, kPi / 4.0),
                                           std::make_tuple(0.5, 1.0 / 3.0, kPi / 2.0),
                                           std::make_tuple(0.7, 1.0 / 3.0, kPi / 4.0),
                                           std::make_tuple(0.7, 1.0 / 3.0, kPi / 2.0),
                                           std::make_tuple(0.3, 0.6, 2.5), std::make_tuple(0.5, 0.2, 3.0)));

TEST(TwoSlitParams, CurveLandingPoint) {
  // small theta: the curve reaches the unit circle
  const TwoSlitParams low = TwoSlitParams::make(0.5, 1.0 / 3.0, 1.0);
  EXPECT_NEAR(std::abs(low.curve.back()), 1.0, 1e-15);
  // theta near pi: the curve lands on the real slit [p, 1)
  const TwoSlitParams high = TwoSlitParams::make(0.5, 1.0 / 3.0, 2.5);
  EXPECT_EQ(high.curve.back().imag(), 0.0);
  EXPECT_GT(high.curve.back().real(), 0.5);
  EXPECT_THROW(TwoSlitParams::make(0.5, 0.2, kPi), PreconditionError);
}

TEST(Psi, Examples) {
  EXPECT_NEAR(std::abs(psi(0.3, 0.6, 0.0) - 0.45), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi(0.3, 0.6, 0.45)), 0.0, 1e-15);
  const auto [z1, z2] = pole_preimages(0.3, 0.6);
  EXPECT_NEAR(z1.real(), -0.2054795, 1e-7);
  EXPECT_NEAR(z2.real(), 0.1734104, 1e-7);
  EXPECT_NEAR(std::abs(psi(0.3, 0.6, z1) - 0.6), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(oracle::psi(0.3, 0.6, z1) - 0.6), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(oracle::psi(0.3, 0.6, z2) - 0.3), 0.0, 1e-12);
  EXPECT_THROW(pole_preimages(0.4, 0.4), PreconditionError);
  EXPECT_THROW(pole_preimages(0.6, 0.3), PreconditionError);
}

TEST(MoebiusMap, CompositionAndInverse) {
  const MoebiusMap m = psi(0.3, 0.6);
  const MoebiusMap id = m.compose(m);
  EXPECT_TRUE(id.equivalent(MoebiusMap::identity(), 1e-12));
  EXPECT_TRUE(m.inverse().equivalent(m, 1e-12));
  const MoebiusMap a(2.0, 1.0, 1.0, 3.0);
  const Complex z(0.2, -0.4);
  EXPECT_NEAR(std::abs(a.compose(m)(z) - a(m(z))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(a.inverse()(a(z)) - z), 0.0, 1e-14);
  EXPECT_THROW(MoebiusMap(1.0, 2.0, 2.0, 4.0), PreconditionError);
}
