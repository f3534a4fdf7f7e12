#include "fr1d/physics.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "fr1d/errors.hpp"

namespace fr1d {

double FluxSpec::max_wave_speed(const Eigen::Ref<const Eigen::MatrixXd>& states) const {
  if (is_linear()) return std::abs(speed_);
  return states.size() == 0 ? 0.0 : states.cwiseAbs().maxCoeff();
}

double upwind_numflux(const FluxSpec& flux, double u_left, double u_right) {
  if (flux.is_linear()) {
    // (a/2)(uL + uR) - (|a|/2)(uR - uL), evaluated as the upwind state so that
    // the result is exactly a uL (a > 0) or a uR (a < 0).
    const double a = flux.speed();
    return a >= 0.0 ? a * u_left : a * u_right;
  }
  const double lambda = std::max(std::abs(u_left), std::abs(u_right));
  return 0.5 * (flux(u_left) + flux(u_right)) - 0.5 * lambda * (u_right - u_left);
}

InitialCondition named_initial_condition(std::string_view name) {
  constexpr double pi = std::numbers::pi;
  if (name == "wavepacket") {
    return {"wavepacket",
            [](double x) { return std::exp(-10.0 * x * x) * std::sin(10.0 * pi * x); },
            [](double x) {
              const double g = std::exp(-10.0 * x * x);
              return g * (10.0 * pi * std::cos(10.0 * pi * x) -
                          20.0 * x * std::sin(10.0 * pi * x));
            }};
  }
  if (name == "sine") {
    return {"sine", [](double x) { return std::sin(2.0 * pi * x); },
            [](double x) { return 2.0 * pi * std::cos(2.0 * pi * x); }};
  }
  if (name == "gauss") {
    return {"gauss", [](double x) { return std::exp(-50.0 * x * x); },
            [](double x) { return -100.0 * x * std::exp(-50.0 * x * x); }};
  }
  constexpr std::string_view const_prefix = "const:";
  if (name.starts_with(const_prefix)) {
    const std::string_view number = name.substr(const_prefix.size());
    double c = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), c);
    if (ec != std::errc() || ptr != number.data() + number.size() || !std::isfinite(c)) {
      throw ConfigError("invalid constant initial condition '" + std::string(name) + "'");
    }
    return {std::string(name), [c](double) { return c; }, [](double) { return 0.0; }};
  }
  throw ConfigError("unknown initial condition '" + std::string(name) +
                    "' (expected wavepacket, sine, gauss or const:<c>)");
}

void validate(const ProblemSpec& problem) {
  if (!(problem.x_min < problem.x_max)) {
    throw ConfigError("domain must satisfy x_min < x_max");
  }
  if (!problem.ic.value) throw ConfigError("problem has no initial condition");
  if (problem.bc == BoundaryKind::DirichletInflow &&
      (!problem.flux.is_linear() || problem.flux.speed() == 0.0)) {
    throw ConfigError("Dirichlet inflow boundaries need linear flux with a != 0");
  }
}

namespace {

double wrap(const ProblemSpec& problem, double x) {
  if (problem.bc != BoundaryKind::Periodic) return x;
  if (x >= problem.x_min && x < problem.x_max) return x;
  const double length = problem.x_max - problem.x_min;
  double s = std::fmod(x - problem.x_min, length);
  if (s < 0.0) s += length;
  return problem.x_min + s;
}

double derivative_of(const InitialCondition& ic, double x) {
  if (ic.derivative) return ic.derivative(x);
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  return (ic.value(x + h) - ic.value(x - h)) / (2.0 * h);
}

}  // namespace

double exact_solution(const ProblemSpec& problem, double x, double t) {
  const InitialCondition& ic = problem.ic;
  if (problem.flux.is_linear()) {
    return ic.value(wrap(problem, x - problem.flux.speed() * t));
  }
  if (t == 0.0) return ic.value(x);

  // Characteristics: u = ic(x - u t).
  double u = ic.value(wrap(problem, x - ic.value(x) * t));
  for (int it = 0; it < 50; ++it) {
    const double xi = wrap(problem, x - u * t);
    const double residual = u - ic.value(xi);
    const double slope = 1.0 + t * derivative_of(ic, xi);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double delta = residual / slope;
    u -= delta;
    if (std::abs(delta) <= 1e-13 * std::max(1.0, std::abs(u))) {
      return u;
    }
  }
  throw NumericalError("Burgers characteristic solve did not converge at x = " +
                       std::to_string(x) + ", t = " + std::to_string(t) +
                       " (t near or past shock formation)");
}

bool inflow_is_left(const ProblemSpec& problem) {
  return problem.flux.speed() > 0.0;
}

double inflow_boundary_value(const ProblemSpec& problem, double t) {
  return exact_solution(problem, inflow_is_left(problem) ? problem.x_min : problem.x_max, t);
}

const char* to_string(BoundaryKind kind) {
  return kind == BoundaryKind::Periodic ? "periodic" : "dirichlet";
}

}  // namespace fr1d
