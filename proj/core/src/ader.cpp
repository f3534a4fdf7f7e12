#include "fr1d/ader.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fr1d/errors.hpp"
#include "fr_update.hpp"

namespace fr1d {

namespace {

// Temporal operator from integrating the predictor equation by parts in time:
// K(k, q) = l_k(1) l_q(1) - w_q l_k'(tau_q).
Eigen::MatrixXd temporal_operator(const Basis& basis) {
  const int n = basis.size();
  Eigen::MatrixXd k_op(n, n);
  for (int k = 0; k < n; ++k) {
    for (int q = 0; q < n; ++q) {
      k_op(k, q) = basis.right_interp[k] * basis.right_interp[q] -
                   basis.weights[q] * basis.diff_matrix(q, k);
    }
  }
  return k_op;
}

void check_factorization(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                         const char* what) {
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw NumericalError(std::string(what) + " is singular (rcond = " +
                         std::to_string(rcond) + ")");
  }
}

Eigen::MatrixXd apply_flux(const FluxSpec& flux, const Eigen::MatrixXd& u) {
  return u.unaryExpr([&flux](double v) { return flux(v); });
}

}  // namespace

Eigen::MatrixXd assemble_predictor_matrix(const Basis& basis, double speed,
                                          double dt, double dx) {
  const int n = basis.size();
  const Eigen::VectorXd& w = basis.weights;
  const Eigen::MatrixXd& d = basis.diff_matrix;
  const Eigen::VectorXd& right = basis.right_interp;
  const double c = speed * dt / dx;
  const auto idx = [n](int j, int k) { return j * n + k; };

  // Quadrature at the tensor nodes collapses l_j(xi_p) to delta_jp.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const int row = idx(j, k);
      for (int q = 0; q < n; ++q) {
        // -int int u~ d_tau(l_j l_k)
        a(row, idx(j, q)) -= w[j] * w[q] * d(q, k);
        // +int u~(xi, 1) l_j l_k(1)
        a(row, idx(j, q)) += w[j] * right[k] * right[q];
      }
      // +(dt/dx) int int (d_xi f~) l_j l_k with f~ = a u~
      for (int m = 0; m < n; ++m) {
        a(row, idx(m, k)) += c * w[j] * w[k] * d(j, m);
      }
    }
  }
  return a;
}

Eigen::VectorXd assemble_predictor_rhs(const Basis& basis,
                                       const Eigen::Ref<const Eigen::VectorXd>& u_elem) {
  const int n = basis.size();
  Eigen::VectorXd b(n * n);
  // +int u_h^n l_j l_k(0)
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      b[j * n + k] = basis.weights[j] * basis.left_interp[k] * u_elem[j];
    }
  }
  return b;
}

double predictor_residual(const Basis& basis, const FluxSpec& flux,
                          const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                          const Predictor& predictor, double dt, double dx) {
  const int n = basis.size();
  const Eigen::VectorXd& w = basis.weights;
  const Eigen::MatrixXd& d = basis.diff_matrix;
  const Eigen::MatrixXd& ut = predictor.values;
  const Eigen::MatrixXd fluxes = apply_flux(flux, ut);
  const Eigen::MatrixXd dflux = d * fluxes;  // d_xi f~ at (xi_p, tau_q)
  const Eigen::VectorXd u_final = ut * basis.right_interp;  // u~(xi_p, 1)

  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double r = 0.0;
      for (int p = 0; p < n; ++p) {
        const double lj = p == j ? 1.0 : 0.0;
        for (int q = 0; q < n; ++q) {
          const double lk = q == k ? 1.0 : 0.0;
          const double dlk = d(q, k);
          r += w[p] * w[q] * (-ut(p, q) * lj * dlk + (dt / dx) * dflux(p, q) * lj * lk);
        }
        r += w[p] * lj * (basis.right_interp[k] * u_final[p] - basis.left_interp[k] * u_elem[p]);
      }
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

DirectPredictorSolver::DirectPredictorSolver(const Basis& basis, double speed,
                                             double dt, double dx)
    : basis_(&basis),
      speed_(speed),
      lu_(assemble_predictor_matrix(basis, speed, dt, dx)) {
  check_factorization(lu_, "predictor system");
}

Predictor DirectPredictorSolver::solve(const Eigen::Ref<const Eigen::VectorXd>& u_elem) const {
  const int n = basis_->size();
  const Eigen::VectorXd x = lu_.solve(assemble_predictor_rhs(*basis_, u_elem));
  Predictor p;
  // Row-major (j, k) unknown ordering.
  p.values = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                            Eigen::RowMajor>>(x.data(), n, n);
  p.fluxes = speed_ * p.values;
  return p;
}

PicardPredictorSolver::PicardPredictorSolver(const Basis& basis, const FluxSpec& flux,
                                             double dt, double dx, int n_iter)
    : basis_(&basis),
      flux_(flux),
      ratio_(dt / dx),
      n_iter_(n_iter > 0 ? n_iter : basis.degree + 1),
      time_lu_(temporal_operator(basis)) {
  check_factorization(time_lu_, "temporal predictor operator");
}

Predictor PicardPredictorSolver::solve(const Eigen::Ref<const Eigen::VectorXd>& u_elem) const {
  const Basis& basis = *basis_;
  const int n = basis.size();
  // Rows are spatial nodes; the constant-in-time part l_k(0) u_j.
  const Eigen::MatrixXd initial_term = u_elem * basis.left_interp.transpose();
  const double start_norm = std::max(u_elem.cwiseAbs().maxCoeff(), 1e-300);

  Eigen::MatrixXd ut = u_elem.replicate(1, n);
  Eigen::MatrixXd fluxes = apply_flux(flux_, ut);
  for (int it = 0; it < n_iter_; ++it) {
    const Eigen::MatrixXd rhs =
        initial_term - ratio_ * (basis.diff_matrix * fluxes) * basis.weights.asDiagonal();
    ut = time_lu_.solve(rhs.transpose()).transpose();
    if (!ut.allFinite() || ut.cwiseAbs().maxCoeff() > 1e6 * start_norm) {
      throw NumericalError("predictor fixed-point iteration diverged at iteration " +
                           std::to_string(it + 1) + " (time step too large?)");
    }
    fluxes = apply_flux(flux_, ut);
  }
  return {ut, fluxes};
}

Predictor solve_predictor_direct(const Basis& basis, double speed,
                                 const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                                 double dt, double dx) {
  return DirectPredictorSolver(basis, speed, dt, dx).solve(u_elem);
}

Predictor solve_predictor_picard(const Basis& basis, const FluxSpec& flux,
                                 const Eigen::Ref<const Eigen::VectorXd>& u_elem,
                                 double dt, double dx, int n_iter) {
  return PicardPredictorSolver(basis, flux, dt, dx, n_iter).solve(u_elem);
}

Eigen::VectorXd predictor_time_average(const Basis& basis, const Predictor& predictor) {
  return predictor.values * basis.weights;
}

AderFluxData compute_ader_flux_data(const SolutionField& state,
                                    const ProblemSpec& problem, double dt,
                                    const AderOptions& options) {
  const Basis& basis = state.basis();
  const Grid& grid = state.grid();
  const int n = basis.size();
  const int n_elem = grid.n_elem;
  const FluxSpec& flux = problem.flux;

  PredictorMethod method = options.predictor;
  if (method == PredictorMethod::Auto) {
    method = flux.is_linear() ? PredictorMethod::Direct : PredictorMethod::Picard;
  }
  if (method == PredictorMethod::Direct && !flux.is_linear()) {
    throw ConfigError("direct predictor solve requires a linear flux");
  }

  std::optional<DirectPredictorSolver> direct;
  std::optional<PicardPredictorSolver> picard;
  if (method == PredictorMethod::Direct) {
    direct.emplace(basis, flux.speed(), dt, grid.dx);
  } else {
    picard.emplace(basis, flux, dt, grid.dx, options.picard_iterations);
  }

  AderFluxData data;
  data.avg_flux.resize(n, n_elem);
  data.avg_solution.resize(n, n_elem);
  data.flux_left.resize(n_elem);
  data.flux_right.resize(n_elem);
  data.solution_left.resize(n_elem);
  data.solution_right.resize(n_elem);
  // Traces of u~ at each temporal node: column per element.
  Eigen::MatrixXd trace_left(n, n_elem);
  Eigen::MatrixXd trace_right(n, n_elem);

  for (int e = 0; e < n_elem; ++e) {
    const Predictor p = direct ? direct->solve(state.element(e)) : picard->solve(state.element(e));
    data.avg_flux.col(e) = p.fluxes * basis.weights;
    data.avg_solution.col(e) = p.values * basis.weights;
    data.flux_left[e] = basis.left_interp.dot(data.avg_flux.col(e));
    data.flux_right[e] = basis.right_interp.dot(data.avg_flux.col(e));
    trace_left.col(e) = p.values.transpose() * basis.left_interp;
    trace_right.col(e) = p.values.transpose() * basis.right_interp;
    data.solution_left[e] = basis.weights.dot(trace_left.col(e));
    data.solution_right[e] = basis.weights.dot(trace_right.col(e));
  }

  // Ghost traces at each temporal node for the two domain boundaries.
  Eigen::VectorXd ghost_left(n), ghost_right(n);
  if (problem.bc == BoundaryKind::Periodic) {
    ghost_left = trace_right.col(n_elem - 1);
    ghost_right = trace_left.col(0);
  } else {
    Eigen::VectorXd inflow(n);
    for (int k = 0; k < n; ++k) {
      inflow[k] = inflow_boundary_value(problem, state.time() + basis.nodes[k] * dt);
    }
    if (inflow_is_left(problem)) {
      ghost_left = inflow;
      ghost_right = trace_right.col(n_elem - 1);
    } else {
      ghost_left = trace_left.col(0);
      ghost_right = inflow;
    }
  }

  data.face_flux.resize(n_elem + 1);
  for (int i = 0; i <= n_elem; ++i) {
    const Eigen::VectorXd ul = i == 0 ? ghost_left : Eigen::VectorXd(trace_right.col(i - 1));
    const Eigen::VectorXd ur = i == n_elem ? ghost_right : Eigen::VectorXd(trace_left.col(i));
    if (options.face_flux == FaceFluxTiming::PerTemporalNode) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += basis.weights[k] * upwind_numflux(flux, ul[k], ur[k]);
      data.face_flux[i] = sum;
    } else {
      data.face_flux[i] =
          upwind_numflux(flux, basis.weights.dot(ul), basis.weights.dot(ur));
    }
  }
  return data;
}

SolutionField ader_step(const SolutionField& state, const ProblemSpec& problem,
                        double dt, const AderOptions& options) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  const AderFluxData data = compute_ader_flux_data(state, problem, dt, options);
  return detail::fr_update(state, dt, data.avg_flux, data.flux_left,
                           data.flux_right, data.face_flux);
}

}  // namespace fr1d
