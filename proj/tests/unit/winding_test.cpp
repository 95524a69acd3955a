#include <gtest/gtest.h>

#include "schlicht/errors.hpp"
#include "schlicht/winding.hpp"

using namespace schlicht;

namespace {

FunctionHandle square() {
  return {[](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z; }, {}, "z^2"};
}

}  // namespace

TEST(Winding, Examples) {
  EXPECT_EQ(winding_number(identity_function(), 0.0, 0.5, 0.0), 1);
  const FunctionHandle k = koebe_handle(UnitRotation(Complex(-1.0, 0.0)));
  EXPECT_EQ(winding_number(k, 0.0, 0.9, 2.0), 1);
  EXPECT_EQ(winding_number(square(), 0.0, 0.5, 0.01), 2);
}

TEST(Winding, PointOutsideImage) {
  EXPECT_EQ(winding_number(square(), 0.0, 0.5, 1.0), 0);
  EXPECT_EQ(winding_number(identity_function(), Complex(0.5, 0.5), 0.1, 0.0), 0);
}

TEST(Winding, FastTurnBetweenCoarseSamples) {
  // z -> (z - a)^2 with a just inside the contour: the argument turns twice
  // within a tiny arc near a, far below the initial sample spacing.
  const Complex a(0.0, 0.9999);
  const FunctionHandle f{[a](Complex z) { return (z - a) * (z - a); }, [a](Complex z) { return 2.0 * (z - a); }, {},
                         "shifted square"};
  EXPECT_EQ(winding_number(f, 0.0, 1.0, 1e-9), 2);
  EXPECT_EQ(winding_number(f, 0.0, 0.9998, 1e-9), 0);
}

TEST(Winding, Errors) {
  EXPECT_THROW(winding_number(identity_function(), 0.0, 0.5, 0.5), DomainError);
  EXPECT_THROW(winding_number(z_over_one_minus_z(), 0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(winding_number(identity_function(), 0.0, -1.0, 0.0), PreconditionError);
  NumericSettings tight;
  tight.winding_sample_budget = 10;
  EXPECT_THROW(winding_number(identity_function(), 0.0, 0.5, 0.0, tight), ConvergenceError);
}
