#pragma once

#include <Eigen/Dense>

#include "fr1d/basis.hpp"
#include "fr1d/mesh_field.hpp"
#include "fr1d/physics.hpp"

namespace fr1d {

/// Element-local space-time predictor
///   u~(xi, tau) = sum_{j,k} values(j, k) l_j(xi) l_k(tau),
/// j indexing space and k indexing time, both on the solution points.
struct Predictor {
  Eigen::MatrixXd values;
  Eigen::MatrixXd fluxes;  // f(values(j, k)), the nodal space-time flux
};

/// Assembled (N+1)^2 x (N+1)^2 predictor system for linear flux. Unknown
/// (j, k) sits at index j * (N+1) + k. Every term is evaluated by
/// tensor-product quadrature at the solution points.
Eigen::MatrixXd assemble_predictor_matrix(const Basis& basis, double speed,
                                          double dt, double dx);
Eigen::VectorXd assemble_predictor_rhs(const Basis& basis,
                                       const Eigen::Ref<const Eigen::VectorXd>& u_elem);

/// Largest absolute residual of the weak predictor equation over all test
/// functions l_j(xi) l_k(tau), evaluated term by term by quadrature.
double predictor_residual(const Basis& basis, const FluxSpec& flux,
                          const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                          const Predictor& predictor, double dt, double dx);

/// Direct dense LU solve of the linear predictor system, factored once and
/// reused for every element sharing (basis, speed, dt, dx).
class DirectPredictorSolver {
 public:
  DirectPredictorSolver(const Basis& basis, double speed, double dt, double dx);
  Predictor solve(const Eigen::Ref<const Eigen::VectorXd>& u_elem) const;

 private:
  const Basis* basis_;
  double speed_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// Fixed-point iteration on the time-integrated predictor equation
///   K u~_j = l(0) u_j - (dt/dx) W (D f~)_j,
/// started from u~ = u_elem for all tau.
class PicardPredictorSolver {
 public:
  PicardPredictorSolver(const Basis& basis, const FluxSpec& flux, double dt,
                        double dx, int n_iter);
  Predictor solve(const Eigen::Ref<const Eigen::VectorXd>& u_elem) const;

 private:
  const Basis* basis_;
  FluxSpec flux_;
  double ratio_;  // dt / dx
  int n_iter_;
  Eigen::PartialPivLU<Eigen::MatrixXd> time_lu_;
};

Predictor solve_predictor_direct(const Basis& basis, double speed,
                                 const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                                 double dt, double dx);

/// `n_iter` <= 0 selects the default N + 1 iterations.
Predictor solve_predictor_picard(const Basis& basis, const FluxSpec& flux,
                                 const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                                 double dt, double dx, int n_iter = 0);

/// (1/dt) int u~(xi_j, t) dt by temporal quadrature.
Eigen::VectorXd predictor_time_average(const Basis& basis, const Predictor& predictor);

enum class PredictorMethod { Auto, Direct, Picard };

// PerTemporalNode averages the numerical flux of the traces at each temporal
// node; AverageFirst applies it once to time-averaged traces (only equal for
// linear flux).
enum class FaceFluxTiming { PerTemporalNode, AverageFirst };

struct AderOptions {
  PredictorMethod predictor = PredictorMethod::Auto;  // Direct if linear
  int picard_iterations = 0;                          // 0 -> N + 1
  FaceFluxTiming face_flux = FaceFluxTiming::PerTemporalNode;
};

/// Time-averaged quantities entering the corrected ADER flux.
struct AderFluxData {
  Eigen::MatrixXd avg_flux;      // (1/dt) int f~(xi_j, t) dt, column per element
  Eigen::MatrixXd avg_solution;  // (1/dt) int u~(xi_j, t) dt
  Eigen::VectorXd flux_left;     // avg f~ trace at xi = 0
  Eigen::VectorXd flux_right;    // avg f~ trace at xi = 1
  Eigen::VectorXd solution_left;
  Eigen::VectorXd solution_right;
  Eigen::VectorXd face_flux;     // n_elem + 1 faces, time-averaged numerical flux
};

AderFluxData compute_ader_flux_data(const SolutionField& state,
                                    const ProblemSpec& problem, double dt,
                                    const AderOptions& options = {});

/// One ADER-FR step. Throws BlowUpError if the update is not finite.
SolutionField ader_step(const SolutionField& state, const ProblemSpec& problem,
                        double dt, const AderOptions& options = {});

}  // namespace fr1d
