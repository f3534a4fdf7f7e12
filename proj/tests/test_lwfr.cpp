#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "fr1d/errors.hpp"
#include "fr1d/lwfr.hpp"
#include "test_support.hpp"

namespace fr1d {
namespace {

using testing::neville;

Basis gl(int n) { return build_basis(NodeKind::GaussLegendre, n, CorrectionKind::Radau); }

ProblemSpec advection(double a, const char* ic = "wavepacket",
                      BoundaryKind bc = BoundaryKind::Periodic) {
  ProblemSpec p;
  p.flux = FluxSpec::linear(a);
  p.ic = named_initial_condition(ic);
  p.bc = bc;
  return p;
}

SolutionField make_field(const Basis& basis, int n_elem, const ScalarFunction& f) {
  return sample_initial_condition(make_grid(-1.0, 1.0, n_elem),
                                  std::make_shared<const Basis>(basis), f);
}

TEST(TimeAveragedSolution, ZeroSpeedAndConstants) {
  const Basis b = gl(3);
  Eigen::VectorXd u(4);
  u << 0.3, -1.2, 2.0, 0.7;
  EXPECT_LE((time_averaged_solution(b, 0.0, u, 0.1, 0.1) - u).cwiseAbs().maxCoeff(), 1e-15);
  const Eigen::VectorXd c = Eigen::VectorXd::Constant(4, -2.5);
  EXPECT_LE((time_averaged_solution(b, 5.0, c, 1e-3, 0.1) - c).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(TimeAveragedSolution, LinearDataIsShiftedByHalfStep) {
  const Basis b = gl(1);
  const double a = 5.0, dt = 1e-3, dx = 0.02;
  const Eigen::VectorXd U = time_averaged_solution(b, a, b.nodes, dt, dx);
  for (int j = 0; j < 2; ++j) EXPECT_NEAR(U[j], b.nodes[j] - a * dt / (2 * dx), 1e-15);
}

TEST(TimeAveragedSolution, MatchesExactTimeIntegralOfTranslatedPolynomial) {
  // (1/dt) int_0^dt u(x - a t) dt, with u the element polynomial.
  const testing::ReferenceRule quad = testing::golub_welsch(20);
  for (int n = 0; n <= 6; ++n) {
    const Basis b = gl(n);
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::VectorXd u(n + 1);
      for (int j = 0; j <= n; ++j) u[j] = testing::uniform(-1, 1);
      const double a = testing::uniform(-5, 5);
      const double dx = 0.05, dt = testing::uniform(0.05, 0.5) * dx / std::abs(a);
      const double c = a * dt / dx;
      const Eigen::VectorXd U = time_averaged_solution(b, a, u, dt, dx);
      for (int j = 0; j <= n; ++j) {
        double exact = 0.0;
        for (std::size_t q = 0; q < quad.x.size(); ++q) {
          exact += quad.w[q] * neville(b.nodes, u, b.nodes[j] - c * quad.x[q]);
        }
        EXPECT_NEAR(U[j], exact, 1e-12) << "N=" << n;
      }
    }
  }
}

TEST(LwNumflux, Examples) {
  EXPECT_DOUBLE_EQ(lw_numflux(Dissipation::D2, 3.0, 2.0, 2.0, 7.0, -1.0), 6.0);
  EXPECT_DOUBLE_EQ(lw_numflux(Dissipation::D2, 1.0, 5.0, 5.0, 4.0, 3.0), 5.0);
  EXPECT_DOUBLE_EQ(lw_numflux(Dissipation::D1, 1.0, 5.0, 5.0, 4.0, 3.0), 5.5);
  EXPECT_DOUBLE_EQ(lw_numflux(Dissipation::D2, 2.0, 1.0, -4.0, 0.0, 0.0), 2.0);
  EXPECT_DOUBLE_EQ(lw_numflux(Dissipation::D2, -2.0, 1.0, -4.0, 0.0, 0.0), 8.0);
}

TEST(LwNumflux, D2IsUpwindOfTimeAverages) {
  for (int trial = 0; trial < 200; ++trial) {
    const double a = testing::uniform(-5, 5);
    const double UL = testing::uniform(-2, 2), UR = testing::uniform(-2, 2);
    const double uL = testing::uniform(-2, 2), uR = testing::uniform(-2, 2);
    EXPECT_EQ(lw_numflux(Dissipation::D2, a, UL, UR, uL, uR),
              upwind_numflux(FluxSpec::linear(a), UL, UR));
  }
}

TEST(LwNumflux, D1MatchesFormula) {
  for (int trial = 0; trial < 200; ++trial) {
    const double a = testing::uniform(-5, 5);
    const double UL = testing::uniform(-2, 2), UR = testing::uniform(-2, 2);
    const double uL = testing::uniform(-2, 2), uR = testing::uniform(-2, 2);
    EXPECT_NEAR(lw_numflux(Dissipation::D1, a, UL, UR, uL, uR),
                0.5 * a * (UL + UR) - 0.5 * std::abs(a) * (uR - uL), 1e-14);
  }
}

class LwStep : public ::testing::TestWithParam<Dissipation> {};

TEST_P(LwStep, ConstantStateUnchanged) {
  const SolutionField f = make_field(gl(2), 10, [](double) { return -1.5; });
  const SolutionField next = lwfr_step(f, advection(5.0), 1e-3, GetParam());
  EXPECT_LE((next.values().array() + 1.5).abs().maxCoeff(), 1e-14);
  EXPECT_DOUBLE_EQ(next.time(), 1e-3);
}

TEST_P(LwStep, ConservesMassOnPeriodicDomain) {
  for (int n = 1; n <= 4; ++n) {
    const ProblemSpec problem = advection(-4.0);
    SolutionField f = make_field(gl(n), 20, problem.ic.value);
    const double m0 = total_mass(f);
    for (int s = 0; s < 5; ++s) {
      f = lwfr_step(f, problem, 0.5 * 0.1 / (4.0 * (n + 1) * (2 * n + 1)), GetParam());
      EXPECT_NEAR(total_mass(f), m0, 1e-13);
    }
  }
}

TEST_P(LwStep, InteriorFacesUseElementTraces) {
  const ProblemSpec problem = advection(5.0);
  const Basis b = gl(3);
  const SolutionField f = make_field(b, 9, problem.ic.value);
  const LwFluxData data = compute_lw_flux_data(f, problem, 1e-3, GetParam());
  EXPECT_EQ(data.face_flux[0], data.face_flux[9]);
  for (int e = 0; e < 9; ++e) {
    EXPECT_NEAR(data.u_left[e], b.left_interp.dot(f.element(e)), 1e-14);
    EXPECT_NEAR(data.U_right[e], b.right_interp.dot(data.avg_solution.col(e)), 1e-14);
  }
  for (int i = 1; i < 9; ++i) {
    EXPECT_EQ(data.face_flux[i], lw_numflux(GetParam(), 5.0, data.U_right[i - 1],
                                            data.U_left[i], data.u_right[i - 1],
                                            data.u_left[i]));
  }
}

TEST_P(LwStep, DirichletInflowGhost) {
  for (const double a : {5.0, -5.0}) {
    const ProblemSpec problem = advection(a, "gauss", BoundaryKind::DirichletInflow);
    SolutionField f = make_field(gl(2), 8, problem.ic.value);
    f.set_time(0.13);
    const double dt = 2e-3;
    const LwFluxData data = compute_lw_flux_data(f, problem, dt, GetParam());
    const testing::ReferenceRule fine = testing::golub_welsch(30);
    double g_avg = 0.0;
    for (std::size_t q = 0; q < fine.x.size(); ++q) {
      g_avg += fine.w[q] * inflow_boundary_value(problem, 0.13 + fine.x[q] * dt);
    }
    const double g_now = inflow_boundary_value(problem, 0.13);
    if (a > 0) {
      const double expected =
          lw_numflux(GetParam(), a, g_avg, data.U_left[0], g_now, data.u_left[0]);
      EXPECT_NEAR(data.face_flux[0], expected, 1e-9);
      EXPECT_NEAR(data.face_flux[8], a * data.U_right[7], 1e-14);
    } else {
      const double expected =
          lw_numflux(GetParam(), a, data.U_right[7], g_avg, data.u_right[7], g_now);
      EXPECT_NEAR(data.face_flux[8], expected, 1e-9);
      EXPECT_NEAR(data.face_flux[0], a * data.U_left[0], 1e-14);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dissipations, LwStep,
                         ::testing::Values(Dissipation::D1, Dissipation::D2),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(LwStepD1, DiffersFromD2OnSmoothData) {
  const ProblemSpec problem = advection(5.0);
  const SolutionField f = make_field(gl(2), 20, problem.ic.value);
  const SolutionField d1 = lwfr_step(f, problem, 1e-3, Dissipation::D1);
  const SolutionField d2 = lwfr_step(f, problem, 1e-3, Dissipation::D2);
  EXPECT_GT((d1.values() - d2.values()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(LwStepErrors, RejectsNonlinearFluxAndBadStep) {
  ProblemSpec problem = advection(5.0);
  const SolutionField f = make_field(gl(1), 4, problem.ic.value);
  EXPECT_THROW(lwfr_step(f, problem, -1e-3, Dissipation::D2), ConfigError);
  problem.flux = FluxSpec::burgers();
  EXPECT_THROW(lwfr_step(f, problem, 1e-3, Dissipation::D2), ConfigError);
}

TEST(LwStepErrors, NonFiniteUpdateIsBlowUp) {
  const ProblemSpec problem = advection(5.0);
  SolutionField f = make_field(gl(1), 4, problem.ic.value);
  f.values()(1, 1) = NAN;
  f.set_time(0.5);
  try {
    lwfr_step(f, problem, 1e-3, Dissipation::D1);
    FAIL() << "expected BlowUpError";
  } catch (const BlowUpError& err) {
    EXPECT_EQ(err.last_stable_time(), 0.5);
  }
}

}  // namespace
}  // namespace fr1d
