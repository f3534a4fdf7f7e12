#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "fr1d/errors.hpp"
#include "fr1d/mesh_field.hpp"

namespace fr1d::detail {

// u_j <- u_j - dt/dx [ (D F)_j + g_R'(x_j)(F_{e+1/2} - F(1)) + g_L'(x_j)(F_{e-1/2} - F(0)) ]
// `face_flux` has n_elem + 1 entries; face e is the left face of element e.
inline SolutionField fr_update(const SolutionField& state, double dt,
                               const Eigen::MatrixXd& flux_nodal,
                               const Eigen::VectorXd& flux_left,
                               const Eigen::VectorXd& flux_right,
                               const Eigen::VectorXd& face_flux) {
  const Basis& basis = state.basis();
  const double ratio = dt / state.grid().dx;
  SolutionField next = state;
  Eigen::MatrixXd& u = next.values();
  for (int e = 0; e < state.n_elem(); ++e) {
    u.col(e) -= ratio * (basis.diff_matrix * flux_nodal.col(e) +
                         basis.corr_deriv_right * (face_flux[e + 1] - flux_right[e]) +
                         basis.corr_deriv_left * (face_flux[e] - flux_left[e]));
  }
  if (!next.all_finite()) {
    throw BlowUpError("solution became non-finite after step from t = " +
                          std::to_string(state.time()),
                      state.time());
  }
  next.set_time(state.time() + dt);
  return next;
}

}  // namespace fr1d::detail
