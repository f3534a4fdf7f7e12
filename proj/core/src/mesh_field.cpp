#include "fr1d/mesh_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fr1d/errors.hpp"

namespace fr1d {

double Grid::face(int i) const {
  if (i == n_elem) return x_max;
  return x_min + i * dx;
}

Eigen::VectorXd Grid::faces() const {
  Eigen::VectorXd f(n_elem + 1);
  for (int i = 0; i <= n_elem; ++i) f[i] = face(i);
  return f;
}

Grid make_grid(double x_min, double x_max, int n_elem) {
  if (n_elem < 1) {
    throw ConfigError("number of elements must be >= 1, got " +
                      std::to_string(n_elem));
  }
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw ConfigError("domain must satisfy x_min < x_max");
  }
  return Grid{x_min, x_max, n_elem, (x_max - x_min) / n_elem};
}

SolutionField::SolutionField(Grid grid, std::shared_ptr<const Basis> basis,
                             double time)
    : grid_(grid),
      basis_(std::move(basis)),
      values_(Eigen::MatrixXd::Zero(basis_->size(), grid.n_elem)),
      time_(time) {}

SolutionField sample_initial_condition(const Grid& grid,
                                       std::shared_ptr<const Basis> basis,
                                       const ScalarFunction& ic) {
  SolutionField field(grid, std::move(basis));
  for (int e = 0; e < grid.n_elem; ++e) {
    for (int j = 0; j < field.n_nodes(); ++j) {
      const double x = field.node_position(e, j);
      const double v = ic(x);
      if (!std::isfinite(v)) {
        throw DataError("initial condition is not finite at x = " +
                        std::to_string(x));
      }
      field.values()(j, e) = v;
    }
  }
  return field;
}

ErrorNorms error_norms(const SolutionField& field, const SpaceTimeFunction& exact,
                       double t) {
  if (!field.all_finite()) {
    throw DataError("error_norms: solution contains non-finite values");
  }
  const Basis& basis = field.basis();
  const QuadratureRule over = legendre_nodes(NodeKind::GaussLegendre, basis.degree + 3);
  const Eigen::MatrixXd interp = interpolation_matrix(basis.nodes, over.nodes);
  const Grid& grid = field.grid();

  double sum_sq = 0.0;
  double linf = 0.0;
  for (int e = 0; e < grid.n_elem; ++e) {
    const Eigen::VectorXd uq = interp * field.element(e);
    double elem_sum = 0.0;
    for (Eigen::Index q = 0; q < over.nodes.size(); ++q) {
      const double x = grid.to_physical(e, over.nodes[q]);
      const double ref = exact(x, t);
      if (!std::isfinite(ref)) {
        throw DataError("error_norms: exact solution is not finite at x = " + std::to_string(x));
      }
      const double diff = uq[q] - ref;
      elem_sum += over.weights[q] * diff * diff;
      linf = std::max(linf, std::abs(diff));
    }
    sum_sq += grid.dx * elem_sum;
  }
  // Finite but huge solutions may overflow the norms to +inf.
  return {std::sqrt(sum_sq), linf};
}

double total_mass(const SolutionField& field) {
  const Eigen::VectorXd& w = field.basis().weights;
  return field.grid().dx * (w.transpose() * field.values()).sum();
}

double max_abs(const SolutionField& field) {
  return field.values().cwiseAbs().maxCoeff();
}

}  // namespace fr1d
