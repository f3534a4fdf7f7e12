#pragma once

#include <Eigen/Dense>

namespace fr1d {

enum class NodeKind { GaussLegendre, GaussLobattoLegendre };

// Huynh's g_Radau (paired with Gauss-Legendre points) or g_2 (paired with
// Gauss-Lobatto-Legendre points).
enum class CorrectionKind { Radau, G2 };

inline constexpr int kMaxDegree = 10;

struct QuadratureRule {
  Eigen::VectorXd nodes;    // ascending, in [0, 1]
  Eigen::VectorXd weights;  // positive, sum to 1
};

/// Gauss-Legendre or Gauss-Lobatto-Legendre rule with `degree + 1` points on
/// the reference interval [0, 1].
///
/// Throws ConfigError for a negative degree or for GLL with degree 0.
QuadratureRule legendre_nodes(NodeKind kind, int degree);

/// D(i, j) = l_j'(x_i) for the Lagrange basis on `nodes`.
/// Throws ConfigError if two nodes coincide.
Eigen::MatrixXd differentiation_matrix(const Eigen::VectorXd& nodes);

/// Values l_j(x) of every Lagrange polynomial on `nodes` at the point x.
Eigen::VectorXd lagrange_values(const Eigen::VectorXd& nodes, double x);

/// Row q holds l_j(targets[q]); maps nodal values to values at `targets`.
Eigen::MatrixXd interpolation_matrix(const Eigen::VectorXd& nodes,
                                     const Eigen::VectorXd& targets);

/// Nodal basis for a degree-N element on [0, 1], together with the
/// correction-function data needed by flux reconstruction. The correction
/// functions only enter through their derivatives at the solution points and
/// their endpoint values g_L(0) = g_R(1) = 1, g_L(1) = g_R(0) = 0.
struct Basis {
  int degree = 0;
  NodeKind kind = NodeKind::GaussLegendre;
  CorrectionKind correction = CorrectionKind::Radau;

  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  Eigen::MatrixXd diff_matrix;
  Eigen::VectorXd left_interp;       // l_j(0)
  Eigen::VectorXd right_interp;      // l_j(1)
  Eigen::VectorXd corr_deriv_left;   // g_L'(x_j) = -l_j(0) / w_j
  Eigen::VectorXd corr_deriv_right;  // g_R'(x_j) = +l_j(1) / w_j

  int size() const { return degree + 1; }
};

/// Builds the basis. Radau requires Gauss-Legendre points and g_2 requires
/// Gauss-Lobatto-Legendre points unless `force_pairing` is set.
Basis build_basis(NodeKind kind, int degree, CorrectionKind correction,
                  bool force_pairing = false);

/// Default correction for a point set (Radau for GL, g_2 for GLL).
CorrectionKind default_correction(NodeKind kind);

const char* to_string(NodeKind kind);
const char* to_string(CorrectionKind kind);

}  // namespace fr1d
