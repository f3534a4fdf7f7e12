#include <cmath>
#include <memory>
#include <numbers>

#include <gtest/gtest.h>

#include "fr1d/errors.hpp"
#include "fr1d/mesh_field.hpp"
#include "test_support.hpp"

namespace fr1d {
namespace {

std::shared_ptr<const Basis> gl_basis(int n) {
  return std::make_shared<const Basis>(
      build_basis(NodeKind::GaussLegendre, n, CorrectionKind::Radau));
}

// Piecewise interpolant of `field` evaluated at a physical point.
double interpolant(const SolutionField& field, double x) {
  const Grid& g = field.grid();
  int e = static_cast<int>(std::floor((x - g.x_min) / g.dx));
  e = std::clamp(e, 0, g.n_elem - 1);
  const double xi = (x - g.face(e)) / g.dx;
  return testing::neville(field.basis().nodes, field.element(e), xi);
}

TEST(MakeGrid, FourElements) {
  const Grid g = make_grid(-1.0, 1.0, 4);
  EXPECT_DOUBLE_EQ(g.dx, 0.5);
  const Eigen::VectorXd f = g.faces();
  const double expected[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (int i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(f[i], expected[i]);
}

TEST(MakeGrid, TwoHundredFortyDofsForLinearElements) {
  // 240 degrees of freedom with N = 1.
  const Grid g = make_grid(-1.0, 1.0, 120);
  EXPECT_DOUBLE_EQ(g.dx, 1.0 / 60.0);
  EXPECT_EQ(g.face(120), 1.0);
}

TEST(MakeGrid, SingleElement) {
  const Grid g = make_grid(0.0, 1.0, 1);
  EXPECT_EQ(g.face(0), 0.0);
  EXPECT_EQ(g.face(1), 1.0);
}

TEST(MakeGrid, RejectsBadInput) {
  EXPECT_THROW(make_grid(0.0, 1.0, 0), ConfigError);
  EXPECT_THROW(make_grid(1.0, 1.0, 4), ConfigError);
  EXPECT_THROW(make_grid(2.0, 1.0, 4), ConfigError);
}

TEST(SampleInitialCondition, Constant) {
  const SolutionField f =
      sample_initial_condition(make_grid(-1, 1, 7), gl_basis(3), [](double) { return 2.5; });
  EXPECT_TRUE((f.values().array() == 2.5).all());
}

TEST(SampleInitialCondition, ReproducesLinearFunctionAtNodes) {
  const SolutionField f =
      sample_initial_condition(make_grid(-1, 1, 5), gl_basis(2), [](double x) { return x; });
  for (int e = 0; e < 5; ++e) {
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(f.values()(j, e), f.node_position(e, j));
  }
}

TEST(SampleInitialCondition, RejectsNonFiniteValues) {
  EXPECT_THROW(sample_initial_condition(make_grid(-1, 1, 4), gl_basis(1),
                                        [](double x) { return x > 0.5 ? NAN : x; }),
               DataError);
}

TEST(ErrorNorms, ZeroAgainstOwnInterpolant) {
  const SolutionField f = sample_initial_condition(
      make_grid(-1, 1, 9), gl_basis(3), [](double x) { return std::sin(3.0 * x); });
  const ErrorNorms norms =
      error_norms(f, [&f](double x, double) { return interpolant(f, x); }, 0.0);
  EXPECT_LE(norms.l2, 1e-14);
  EXPECT_LE(norms.linf, 1e-14);
}

TEST(ErrorNorms, ZeroFieldAgainstOne) {
  const SolutionField f =
      sample_initial_condition(make_grid(0, 1, 3), gl_basis(2), [](double) { return 0.0; });
  const ErrorNorms norms = error_norms(f, [](double, double) { return 1.0; }, 0.0);
  EXPECT_NEAR(norms.l2, 1.0, 1e-14);
  EXPECT_NEAR(norms.linf, 1.0, 1e-14);
}

TEST(ErrorNorms, PolynomialInitialDataIsExact) {
  for (int n = 1; n <= 5; ++n) {
    const auto c = testing::random_polynomial(n);
    const auto p = [&c](double x) { return testing::eval_poly(c, x); };
    const SolutionField f = sample_initial_condition(make_grid(-1, 1, 6), gl_basis(n), p);
    const ErrorNorms norms = error_norms(f, [&p](double x, double) { return p(x); }, 0.0);
    EXPECT_LE(norms.linf, 1e-13) << "N=" << n;
  }
}

TEST(ErrorNorms, WavepacketSamplingErrorDecreasesWithDegree) {
  const auto packet = [](double x) {
    return std::exp(-10.0 * x * x) * std::sin(10.0 * std::numbers::pi * x);
  };
  double previous = INFINITY;
  for (int n = 1; n <= 3; ++n) {
    const SolutionField f =
        sample_initial_condition(make_grid(-1, 1, 240 / (n + 1)), gl_basis(n), packet);
    const double l2 = error_norms(f, [&](double x, double) { return packet(x); }, 0.0).l2;
    EXPECT_LT(l2, previous) << "N=" << n;
    previous = l2;
  }
}

TEST(ErrorNorms, RejectsNonFiniteField) {
  SolutionField f(make_grid(0, 1, 2), gl_basis(1));
  f.values()(0, 0) = NAN;
  EXPECT_THROW(error_norms(f, [](double, double) { return 0.0; }, 0.0), DataError);
}

TEST(ErrorNorms, RejectsNonFiniteExactSolution) {
  SolutionField f(make_grid(0, 1, 2), gl_basis(1));
  EXPECT_THROW(error_norms(f, [](double x, double) { return x > 0.5 ? INFINITY : 0.0; }, 0.0),
               DataError);
}

TEST(ErrorNorms, OverflowingNormsAreInfinite) {
  SolutionField f(make_grid(0, 1, 2), gl_basis(1));
  f.values().setConstant(1e300);
  const ErrorNorms norms = error_norms(f, [](double, double) { return 0.0; }, 0.0);
  EXPECT_TRUE(std::isinf(norms.l2));
  EXPECT_NEAR(norms.linf, 1e300, 1e286);
}

TEST(TotalMass, EqualsIntegralOfInterpolant) {
  const testing::ReferenceRule fine = testing::golub_welsch(20);
  for (const NodeKind kind : {NodeKind::GaussLegendre, NodeKind::GaussLobattoLegendre}) {
    const auto basis = std::make_shared<const Basis>(build_basis(kind, 3, default_correction(kind)));
    const SolutionField f = sample_initial_condition(
        make_grid(-1, 1, 8), basis, [](double x) { return std::exp(x) * std::cos(4 * x); });
    double integral = 0.0;
    for (int e = 0; e < f.n_elem(); ++e) {
      for (std::size_t q = 0; q < fine.x.size(); ++q) {
        integral += f.grid().dx * fine.w[q] *
                    testing::neville(f.basis().nodes, f.element(e), fine.x[q]);
      }
    }
    EXPECT_NEAR(total_mass(f), integral, 1e-14);
  }
}

}  // namespace
}  // namespace fr1d
