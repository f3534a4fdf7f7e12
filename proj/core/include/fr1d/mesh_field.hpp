#pragma once

#include <functional>
#include <memory>

#include <Eigen/Dense>

#include "fr1d/basis.hpp"

namespace fr1d {

using ScalarFunction = std::function<double(double)>;
using SpaceTimeFunction = std::function<double(double, double)>;

/// Uniform partition of [x_min, x_max] into n_elem elements.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_elem = 1;
  double dx = 1.0;

  /// Position of face i, i = 0..n_elem; face e is the left face of element e.
  double face(int i) const;
  Eigen::VectorXd faces() const;
  double length() const { return x_max - x_min; }
  /// Physical coordinate of reference point xi in element e.
  double to_physical(int e, double xi) const { return face(e) + xi * dx; }
};

Grid make_grid(double x_min, double x_max, int n_elem);

/// Nodal solution: column e holds u_j^e, j = 0..N.
class SolutionField {
 public:
  SolutionField(Grid grid, std::shared_ptr<const Basis> basis, double time = 0.0);

  const Grid& grid() const { return grid_; }
  const Basis& basis() const { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }

  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  int n_elem() const { return grid_.n_elem; }
  int n_nodes() const { return basis_->size(); }

  Eigen::MatrixXd& values() { return values_; }
  const Eigen::MatrixXd& values() const { return values_; }

  auto element(int e) { return values_.col(e); }
  auto element(int e) const { return values_.col(e); }

  /// Physical coordinate of solution point j of element e.
  double node_position(int e, int j) const {
    return grid_.to_physical(e, basis_->nodes[j]);
  }

  bool all_finite() const { return values_.allFinite(); }

 private:
  Grid grid_;
  std::shared_ptr<const Basis> basis_;
  Eigen::MatrixXd values_;
  double time_;
};

/// Nodal collocation u_j^e = ic(x_j^e). Throws DataError when ic returns a
/// non-finite value.
SolutionField sample_initial_condition(const Grid& grid,
                                       std::shared_ptr<const Basis> basis,
                                       const ScalarFunction& ic);

struct ErrorNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

/// L2 and max errors of the piecewise polynomial against `exact(x, t)`,
/// sampled at (N+4)-point Gauss-Legendre points in every element. Throws
/// DataError for non-finite input; norms that overflow come back as +inf.
ErrorNorms error_norms(const SolutionField& field, const SpaceTimeFunction& exact,
                       double t);

/// sum_e dx sum_j w_j u_j^e, equal to the integral of u_h.
double total_mass(const SolutionField& field);

/// max_j,e |u_j^e|
double max_abs(const SolutionField& field);

}  // namespace fr1d
