#include "fr1d/lwfr.hpp"

#include <cmath>

#include "fr1d/errors.hpp"
#include "fr_update.hpp"

namespace fr1d {

Eigen::VectorXd time_averaged_solution(const Basis& basis, double speed,
                                       const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                                       double dt, double dx) {
  const double c = -speed * dt / dx;
  // term_k = (-a dt)^k / k! d_x^k u
  Eigen::VectorXd term = u_elem;
  Eigen::VectorXd avg = u_elem;
  for (int k = 1; k <= basis.degree; ++k) {
    term = (c / k) * (basis.diff_matrix * term);
    avg += term / (k + 1);
  }
  return avg;
}

double lw_numflux(Dissipation kind, double speed, double U_left, double U_right,
                  double u_left, double u_right) {
  if (kind == Dissipation::D2) {
    // Upwind flux of the time-averaged traces.
    return speed >= 0.0 ? speed * U_left : speed * U_right;
  }
  return 0.5 * speed * (U_left + U_right) - 0.5 * std::abs(speed) * (u_right - u_left);
}

LwFluxData compute_lw_flux_data(const SolutionField& state, const ProblemSpec& problem,
                                double dt, Dissipation kind) {
  if (!problem.flux.is_linear()) {
    throw ConfigError("Lax-Wendroff FR is implemented for linear flux only");
  }
  const Basis& basis = state.basis();
  const Grid& grid = state.grid();
  const int n = basis.size();
  const int n_elem = grid.n_elem;
  const double a = problem.flux.speed();

  LwFluxData data;
  data.avg_solution.resize(n, n_elem);
  for (int e = 0; e < n_elem; ++e) {
    data.avg_solution.col(e) = time_averaged_solution(basis, a, state.element(e), dt, grid.dx);
  }
  data.avg_flux = a * data.avg_solution;
  data.U_left = data.avg_solution.transpose() * basis.left_interp;
  data.U_right = data.avg_solution.transpose() * basis.right_interp;
  data.u_left = state.values().transpose() * basis.left_interp;
  data.u_right = state.values().transpose() * basis.right_interp;

  // Ghost (U, u) pairs outside the left and right boundaries.
  double ghost_U_left, ghost_u_left, ghost_U_right, ghost_u_right;
  if (problem.bc == BoundaryKind::Periodic) {
    ghost_U_left = data.U_right[n_elem - 1];
    ghost_u_left = data.u_right[n_elem - 1];
    ghost_U_right = data.U_left[0];
    ghost_u_right = data.u_left[0];
  } else {
    // Inflow: time-averaged boundary data for U, data at t^n for u.
    double inflow_avg = 0.0;
    for (int k = 0; k < n; ++k) {
      inflow_avg += basis.weights[k] *
                    inflow_boundary_value(problem, state.time() + basis.nodes[k] * dt);
    }
    const double inflow_now = inflow_boundary_value(problem, state.time());
    if (inflow_is_left(problem)) {
      ghost_U_left = inflow_avg;
      ghost_u_left = inflow_now;
      ghost_U_right = data.U_right[n_elem - 1];
      ghost_u_right = data.u_right[n_elem - 1];
    } else {
      ghost_U_left = data.U_left[0];
      ghost_u_left = data.u_left[0];
      ghost_U_right = inflow_avg;
      ghost_u_right = inflow_now;
    }
  }

  data.face_flux.resize(n_elem + 1);
  for (int i = 0; i <= n_elem; ++i) {
    const double UL = i == 0 ? ghost_U_left : data.U_right[i - 1];
    const double uL = i == 0 ? ghost_u_left : data.u_right[i - 1];
    const double UR = i == n_elem ? ghost_U_right : data.U_left[i];
    const double uR = i == n_elem ? ghost_u_right : data.u_left[i];
    data.face_flux[i] = lw_numflux(kind, a, UL, UR, uL, uR);
  }
  return data;
}

SolutionField lwfr_step(const SolutionField& state, const ProblemSpec& problem,
                        double dt, Dissipation kind) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  const LwFluxData data = compute_lw_flux_data(state, problem, dt, kind);
  const double a = problem.flux.speed();
  return detail::fr_update(state, dt, data.avg_flux, a * data.U_left,
                           a * data.U_right, data.face_flux);
}

const char* to_string(Dissipation kind) {
  return kind == Dissipation::D1 ? "d1" : "d2";
}

}  // namespace fr1d
