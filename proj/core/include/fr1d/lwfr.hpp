#pragma once

#include <Eigen/Dense>

#include "fr1d/basis.hpp"
#include "fr1d/mesh_field.hpp"
#include "fr1d/physics.hpp"

namespace fr1d {

// Interface-flux dissipation built from the current solution trace (D1) or
// from the time-averaged solution trace (D2).
enum class Dissipation { D1, D2 };

/// U = sum_{k=0}^{N} (-a dt)^k / (k+1)! d_x^k u, by repeated application of
/// D / dx to the nodal values.
Eigen::VectorXd time_averaged_solution(const Basis& basis, double speed,
                                       const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                                       double dt, double dx);

/// D2: (a/2)(UL + UR) - (|a|/2)(UR - UL)
/// D1: (a/2)(UL + UR) - (|a|/2)(uR - uL)
double lw_numflux(Dissipation kind, double speed, double U_left, double U_right,
                  double u_left, double u_right);

struct LwFluxData {
  Eigen::MatrixXd avg_solution;  // U at the solution points, column per element
  Eigen::MatrixXd avg_flux;      // a U
  Eigen::VectorXd U_left, U_right;  // traces of U at xi = 0, 1
  Eigen::VectorXd u_left, u_right;  // traces of u_h^n
  Eigen::VectorXd face_flux;        // n_elem + 1 faces
};

/// Throws ConfigError for non-linear flux.
LwFluxData compute_lw_flux_data(const SolutionField& state, const ProblemSpec& problem,
                                double dt, Dissipation kind);

/// One Lax-Wendroff FR step. Throws BlowUpError if the update is not finite.
SolutionField lwfr_step(const SolutionField& state, const ProblemSpec& problem,
                        double dt, Dissipation kind);

const char* to_string(Dissipation kind);

}  // namespace fr1d
