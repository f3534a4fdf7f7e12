#include <cmath>

#include <gtest/gtest.h>

#include "fr1d/errors.hpp"
#include "fr1d/physics.hpp"
#include "test_support.hpp"

namespace fr1d {
namespace {

ProblemSpec advection(double a, const char* ic, BoundaryKind bc = BoundaryKind::Periodic) {
  ProblemSpec p;
  p.flux = FluxSpec::linear(a);
  p.ic = named_initial_condition(ic);
  p.bc = bc;
  return p;
}

TEST(UpwindNumflux, Consistency) {
  EXPECT_DOUBLE_EQ(upwind_numflux(FluxSpec::linear(5.0), 2.0, 2.0), 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double u = testing::uniform(-10.0, 10.0);
    const double a = testing::uniform(-5.0, 5.0);
    EXPECT_NEAR(upwind_numflux(FluxSpec::linear(a), u, u), a * u, 1e-14 * std::abs(a * u) + 1e-300);
    EXPECT_NEAR(upwind_numflux(FluxSpec::burgers(), u, u), 0.5 * u * u, 1e-13);
  }
}

TEST(UpwindNumflux, PicksUpwindState) {
  EXPECT_DOUBLE_EQ(upwind_numflux(FluxSpec::linear(5.0), 1.0, 3.0), 5.0);
  EXPECT_DOUBLE_EQ(upwind_numflux(FluxSpec::linear(-2.0), 1.0, 3.0), -6.0);
  for (int i = 0; i < 1000; ++i) {
    const double ul = testing::uniform(-1, 1);
    const double ur = testing::uniform(-1, 1);
    const double a = testing::uniform(0.1, 5.0);
    EXPECT_EQ(upwind_numflux(FluxSpec::linear(a), ul, ur), a * ul);
    EXPECT_EQ(upwind_numflux(FluxSpec::linear(-a), ul, ur), -a * ur);
  }
}

TEST(UpwindNumflux, BurgersRusanov) {
  // (f(1) + f(3)) / 2 - 3/2 (3 - 1) = 2.5 - 3
  EXPECT_DOUBLE_EQ(upwind_numflux(FluxSpec::burgers(), 1.0, 3.0), -0.5);
}

TEST(NamedInitialConditions, KnownNames) {
  EXPECT_NEAR(named_initial_condition("wavepacket").value(0.05),
              std::exp(-0.025) * std::sin(0.5 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(named_initial_condition("sine").value(0.25), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(named_initial_condition("gauss").value(0.0), 1.0);
  EXPECT_DOUBLE_EQ(named_initial_condition("const:3").value(0.7), 3.0);
  EXPECT_DOUBLE_EQ(named_initial_condition("const:-1.5e-1").value(0.7), -0.15);
}

TEST(NamedInitialConditions, DerivativesMatchFiniteDifferences) {
  for (const char* name : {"wavepacket", "sine", "gauss"}) {
    const InitialCondition ic = named_initial_condition(name);
    for (int i = 0; i < 50; ++i) {
      const double x = testing::uniform(-1, 1);
      const double h = 1e-5;
      const double fd = (ic.value(x + h) - ic.value(x - h)) / (2 * h);
      EXPECT_NEAR(ic.derivative(x), fd, 1e-6 * (1 + std::abs(fd))) << name;
    }
  }
}

TEST(NamedInitialConditions, RejectsUnknown) {
  EXPECT_THROW(named_initial_condition("square"), ConfigError);
  EXPECT_THROW(named_initial_condition("const:"), ConfigError);
  EXPECT_THROW(named_initial_condition("const:1x"), ConfigError);
}

TEST(ExactSolution, AdvectionAtTimeZero) {
  const ProblemSpec p = advection(5.0, "wavepacket");
  for (double x : {-0.9, -0.3, 0.0, 0.41}) {
    EXPECT_EQ(exact_solution(p, x, 0.0), p.ic.value(x));
  }
}

TEST(ExactSolution, AdvectionFullPeriodReturnsInitialData) {
  const ProblemSpec p = advection(5.0, "wavepacket");
  for (int i = 0; i < 100; ++i) {
    const double x = testing::uniform(-1, 1);
    EXPECT_NEAR(exact_solution(p, x, 0.4), p.ic.value(x), 1e-12);
  }
}

TEST(ExactSolution, DirichletDoesNotWrap) {
  const ProblemSpec p = advection(1.0, "gauss", BoundaryKind::DirichletInflow);
  EXPECT_NEAR(exact_solution(p, 0.5, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(inflow_boundary_value(p, 0.0), std::exp(-50.0), 1e-20);
  EXPECT_TRUE(inflow_is_left(p));
}

TEST(ExactSolution, BurgersConstantState) {
  ProblemSpec p;
  p.flux = FluxSpec::burgers();
  p.ic = named_initial_condition("const:0.7");
  EXPECT_DOUBLE_EQ(exact_solution(p, 0.3, 0.9), 0.7);
}

TEST(ExactSolution, BurgersSatisfiesCharacteristicEquation) {
  ProblemSpec p;
  p.flux = FluxSpec::burgers();
  p.ic = named_initial_condition("sine");
  // Shock forms at t = 1 / (2 pi) ~ 0.159.
  for (double t : {0.02, 0.08, 0.14}) {
    for (int i = 0; i < 100; ++i) {
      const double x = testing::uniform(-1, 1);
      const double u = exact_solution(p, x, t);
      EXPECT_LE(std::abs(u - p.ic.value(x - u * t)), 1e-12);
    }
  }
}

TEST(ProblemValidation, DirichletNeedsLinearNonzeroSpeed) {
  ProblemSpec p = advection(0.0, "sine", BoundaryKind::DirichletInflow);
  EXPECT_THROW(validate(p), ConfigError);
  p.flux = FluxSpec::burgers();
  EXPECT_THROW(validate(p), ConfigError);
  p.flux = FluxSpec::linear(-1.0);
  EXPECT_NO_THROW(validate(p));
  EXPECT_FALSE(inflow_is_left(p));
}

}  // namespace
}  // namespace fr1d
