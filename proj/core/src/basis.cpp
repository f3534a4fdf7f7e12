#include "fr1d/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fr1d/errors.hpp"

namespace fr1d {

namespace {

using Real = long double;

struct LegendreEval {
  Real p;       // P_n(x)
  Real p_prev;  // P_{n-1}(x)
  Real dp;      // P_n'(x)
};

// Three-term recurrence on [-1, 1].
LegendreEval legendre(int n, Real x) {
  if (n == 0) return {1.0L, 0.0L, 0.0L};
  Real p_prev = 1.0L;
  Real p = x;
  Real dp_prev = 0.0L;
  Real dp = 1.0L;
  for (int k = 1; k < n; ++k) {
    const Real p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
    const Real dp_next = dp_prev + (2 * k + 1) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, p_prev, dp};
}

constexpr int kNewtonMaxIter = 100;
constexpr Real kNewtonTol = 1e-18L;

// Roots of P_n, ascending, with weights 2 / ((1 - x^2) P_n'(x)^2).
void gauss_legendre(int n, std::vector<Real>& x, std::vector<Real>& w) {
  x.assign(n, 0.0L);
  w.assign(n, 0.0L);
  const Real pi = std::numbers::pi_v<Real>;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-type initial guess for the i-th largest root.
    Real r = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const LegendreEval le = legendre(n, r);
      const Real delta = le.p / le.dp;
      r -= delta;
      if (std::fabs(delta) < kNewtonTol) break;
    }
    const LegendreEval le = legendre(n, r);
    const Real weight = 2.0L / ((1.0L - r * r) * le.dp * le.dp);
    x[n - 1 - i] = r;
    x[i] = -r;
    w[n - 1 - i] = weight;
    w[i] = weight;
  }
  if (n % 2 == 1) x[n / 2] = 0.0L;
}

// Endpoints plus the roots of P_N', with weights 2 / (N (N + 1) P_N(x)^2).
// Interior roots are found by Newton on q = P_{N+1} - P_{N-1}, whose
// derivative is (2N + 1) P_N.
void gauss_lobatto(int n_points, std::vector<Real>& x, std::vector<Real>& w) {
  const int N = n_points - 1;
  x.assign(n_points, 0.0L);
  w.assign(n_points, 0.0L);
  const Real pi = std::numbers::pi_v<Real>;
  const Real end_weight = 2.0L / (N * (N + 1));
  x[0] = -1.0L;
  x[N] = 1.0L;
  w[0] = w[N] = end_weight;
  for (int i = 1; i <= (N - 1 + 1) / 2; ++i) {
    Real r = std::cos(pi * i / N);  // Chebyshev-Gauss-Lobatto guess
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const LegendreEval up = legendre(N + 1, r);
      const Real q = up.p - legendre(N - 1, r).p;
      const Real dq = (2 * N + 1) * up.p_prev;
      const Real delta = q / dq;
      r -= delta;
      if (std::fabs(delta) < kNewtonTol) break;
    }
    const Real pn = legendre(N, r).p;
    const Real weight = end_weight / (pn * pn);
    x[N - i] = r;
    x[i] = -r;
    w[N - i] = weight;
    w[i] = weight;
  }
  if (N % 2 == 0) x[N / 2] = 0.0L;
}

}  // namespace

QuadratureRule legendre_nodes(NodeKind kind, int degree) {
  if (degree < 0) {
    throw ConfigError("quadrature degree must be non-negative, got " +
                      std::to_string(degree));
  }
  const int n = degree + 1;
  std::vector<Real> x, w;
  if (kind == NodeKind::GaussLegendre) {
    gauss_legendre(n, x, w);
  } else {
    if (degree == 0) {
      throw ConfigError("Gauss-Lobatto-Legendre points need degree >= 1");
    }
    gauss_lobatto(n, x, w);
  }

  QuadratureRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = static_cast<double>((x[i] + 1.0L) / 2.0L);
    rule.weights[i] = static_cast<double>(w[i] / 2.0L);
  }
  return rule;
}

Eigen::MatrixXd differentiation_matrix(const Eigen::VectorXd& nodes) {
  const Eigen::Index n = nodes.size();
  // Barycentric weights lambda_j = 1 / prod_{k != j} (x_j - x_k).
  Eigen::VectorXd lambda = Eigen::VectorXd::Ones(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == j) continue;
      const double diff = nodes[j] - nodes[k];
      if (diff == 0.0) {
        throw ConfigError("differentiation_matrix: duplicate node at index " +
                          std::to_string(k));
      }
      lambda[j] /= diff;
    }
  }

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = (lambda[j] / lambda[i]) / (nodes[i] - nodes[j]);
      row_sum += d(i, j);
    }
    // Negative-sum trick: rows annihilate constants to roundoff.
    d(i, i) = -row_sum;
  }
  return d;
}

Eigen::VectorXd lagrange_values(const Eigen::VectorXd& nodes, double x) {
  const Eigen::Index n = nodes.size();
  Eigen::VectorXd values(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double v = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k != j) v *= (x - nodes[k]) / (nodes[j] - nodes[k]);
    }
    values[j] = v;
  }
  return values;
}

Eigen::MatrixXd interpolation_matrix(const Eigen::VectorXd& nodes,
                                     const Eigen::VectorXd& targets) {
  Eigen::MatrixXd m(targets.size(), nodes.size());
  for (Eigen::Index q = 0; q < targets.size(); ++q) {
    m.row(q) = lagrange_values(nodes, targets[q]).transpose();
  }
  return m;
}

CorrectionKind default_correction(NodeKind kind) {
  return kind == NodeKind::GaussLegendre ? CorrectionKind::Radau
                                         : CorrectionKind::G2;
}

Basis build_basis(NodeKind kind, int degree, CorrectionKind correction,
                  bool force_pairing) {
  if (degree < 0 || degree > kMaxDegree) {
    throw ConfigError("degree must be in [0, " + std::to_string(kMaxDegree) +
                      "], got " + std::to_string(degree));
  }
  if (!force_pairing && correction != default_correction(kind)) {
    throw ConfigError(std::string("correction '") + to_string(correction) +
                      "' does not pair with '" + to_string(kind) +
                      "' points (use force pairing to override)");
  }

  QuadratureRule rule = legendre_nodes(kind, degree);

  Basis b;
  b.degree = degree;
  b.kind = kind;
  b.correction = correction;
  b.diff_matrix = differentiation_matrix(rule.nodes);
  b.left_interp = lagrange_values(rule.nodes, 0.0);
  b.right_interp = lagrange_values(rule.nodes, 1.0);
  b.corr_deriv_left = -b.left_interp.cwiseQuotient(rule.weights);
  b.corr_deriv_right = b.right_interp.cwiseQuotient(rule.weights);
  b.nodes = std::move(rule.nodes);
  b.weights = std::move(rule.weights);
  return b;
}

const char* to_string(NodeKind kind) {
  return kind == NodeKind::GaussLegendre ? "gl" : "gll";
}

const char* to_string(CorrectionKind kind) {
  return kind == CorrectionKind::Radau ? "radau" : "g2";
}

}  // namespace fr1d
