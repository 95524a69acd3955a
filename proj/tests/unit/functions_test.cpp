#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "schlicht/errors.hpp"
#include "schlicht/functions.hpp"

using namespace schlicht;

namespace {

std::vector<Complex> interior_points(const FunctionHandle& f, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  while (static_cast<int>(pts.size()) < count) {
    const Complex z = std::polar(0.95 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    if (f.pole_distance(z) > 0.05) pts.push_back(z);
  }
  return pts;
}

std::vector<FunctionHandle> registry() {
  return {identity_function(),
          z_over_one_minus_z(),
          z_plus_z2_over_one_minus_z(),
          moebius_pole(0.5),
          two_pole_rational(0.5, Complex(0.0, 1.0 / 3.0)),
          two_pole_rational(0.5, Complex(0.0, 0.5)),
          koebe_handle(UnitRotation(Complex(1.0, 0.0)))};
}

}  // namespace

TEST(Functions, NormalizedAtOrigin) {
  for (const auto& f : registry()) {
    // the two-pole rational map is only normalized in f'(0)
    if (f.label != "two-pole-rational") EXPECT_NEAR(std::abs(f.eval(0.0)), 0.0, 1e-14) << f.label;
    EXPECT_NEAR(std::abs(f.deriv(0.0) - 1.0), 0.0, 1e-12) << f.label;
  }
}

TEST(Functions, DerivativeAgreesWithRichardsonDifference) {
  for (const auto& f : registry()) {
    const auto pts = interior_points(f, 100, 5);
    EXPECT_LT(derivative_mismatch(f, pts), 1e-6) << f.label;
    for (const Complex z : pts) {
      const Complex fd = oracle::derivative(f.eval, z, 1e-4);
      EXPECT_LT(std::abs(fd - f.deriv(z)), 1e-6 * std::max(1.0, std::abs(f.deriv(z)))) << f.label;
    }
  }
}

TEST(Functions, PoleMetadata) {
  EXPECT_TRUE(z_over_one_minus_z().has_pole_at(1.0));
  EXPECT_TRUE(moebius_pole(0.3).has_pole_at(0.3));
  const auto two = two_pole_rational(0.5, Complex(0.1, 0.2));
  EXPECT_TRUE(two.has_pole_at(0.5));
  EXPECT_TRUE(two.has_pole_at(Complex(0.1, 0.2)));
  EXPECT_EQ(koebe_handle(UnitRotation(Complex(1.0, 0.0))).poles.front().order, 2);
  EXPECT_TRUE(std::isinf(identity_function().pole_distance(0.3)));
  EXPECT_NEAR(z_over_one_minus_z().pole_distance(0.25), 0.75, 1e-15);
}

TEST(Functions, FiniteAwayFromPoles) {
  for (const auto& f : registry()) {
    for (const auto& pole : f.poles) {
      const Complex v = f.eval(pole.location + Complex(0.0, 2e-9));
      EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag())) << f.label;
    }
  }
}

TEST(Functions, Preconditions) {
  EXPECT_THROW(moebius_pole(0.0), PreconditionError);
  EXPECT_THROW(two_pole_rational(0.5, 0.5), PreconditionError);
  EXPECT_THROW(two_pole_rational(0.5, 0.0), PreconditionError);
  EXPECT_THROW(two_pole_rational(1.5, 0.2), PreconditionError);
}
