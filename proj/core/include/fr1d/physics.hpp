#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "fr1d/mesh_field.hpp"

namespace fr1d {

/// f(u) = a u, or Burgers' f(u) = u^2 / 2.
class FluxSpec {
 public:
  enum class Kind { LinearAdvection, Burgers };

  static FluxSpec linear(double speed) { return FluxSpec(Kind::LinearAdvection, speed); }
  static FluxSpec burgers() { return FluxSpec(Kind::Burgers, 0.0); }

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::LinearAdvection; }
  /// Advection speed a; only meaningful for linear flux.
  double speed() const { return speed_; }

  double operator()(double u) const {
    return is_linear() ? speed_ * u : 0.5 * u * u;
  }
  double derivative(double u) const { return is_linear() ? speed_ : u; }

  /// max |f'(u)| over the given states.
  double max_wave_speed(const Eigen::Ref<const Eigen::MatrixXd>& states) const;

 private:
  FluxSpec(Kind kind, double speed) : kind_(kind), speed_(speed) {}

  Kind kind_;
  double speed_;
};

/// Interface flux. Linear: the upwind flux
///   (a/2)(uL + uR) - (|a|/2)(uR - uL);
/// Burgers: Rusanov with lambda = max(|uL|, |uR|).
double upwind_numflux(const FluxSpec& flux, double u_left, double u_right);

struct InitialCondition {
  std::string name;
  ScalarFunction value;
  ScalarFunction derivative;  // used by the Burgers characteristic solve
};

/// "wavepacket", "sine", "gauss" or "const:<c>". Throws ConfigError otherwise.
InitialCondition named_initial_condition(std::string_view name);

enum class BoundaryKind { Periodic, DirichletInflow };

struct ProblemSpec {
  FluxSpec flux = FluxSpec::linear(1.0);
  InitialCondition ic;
  BoundaryKind bc = BoundaryKind::Periodic;
  double x_min = -1.0;
  double x_max = 1.0;
};

/// Validates the problem; DirichletInflow needs linear flux with a != 0.
void validate(const ProblemSpec& problem);

/// Advection: ic(x - a t), wrapped into the domain for periodic problems.
/// Burgers: solves u = ic(x - u t) by Newton; throws NumericalError if that
/// does not converge in 50 iterations (t at or past shock formation).
double exact_solution(const ProblemSpec& problem, double x, double t);

/// Inflow data g(t): the exact solution at the inflow face.
double inflow_boundary_value(const ProblemSpec& problem, double t);

/// True if the inflow face is x_min (a > 0).
bool inflow_is_left(const ProblemSpec& problem);

const char* to_string(BoundaryKind kind);

}  // namespace fr1d
