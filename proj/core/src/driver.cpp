#include "fr1d/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace fr1d {

namespace {

std::shared_ptr<const Basis> make_basis(const RunConfig& config) {
  return std::make_shared<const Basis>(
      build_basis(config.points, config.degree, config.correction, config.force_pairing));
}

ErrorSample sample(const Simulation& sim) {
  const ErrorNorms norms = sim.errors();
  return {sim.time(), norms.l2, norms.linf};
}

// Sample taken after a step that started at t_prev. Overflowing norms mean
// the run has blown up even though every value is still finite.
ErrorSample checked_sample(const Simulation& sim, double t_prev) {
  const ErrorSample s = sample(sim);
  if (!std::isfinite(s.l2_error) || !std::isfinite(s.linf_error)) {
    throw BlowUpError("error norm overflowed at t = " + std::to_string(s.time), t_prev);
  }
  return s;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.degree < 0 || config.degree > kMaxDegree) {
    throw ConfigError("degree must be in [0, " + std::to_string(kMaxDegree) + "]");
  }
  if (config.n_elem < 1) throw ConfigError("number of elements must be >= 1");
  // Values above 1 are allowed so that stability limits can be probed.
  if (!(config.cfl_safety > 0.0) || !std::isfinite(config.cfl_safety)) {
    throw ConfigError("cfl safety factor must be positive");
  }
  if (!(config.t_final > 0.0) || !std::isfinite(config.t_final)) {
    throw ConfigError("final time must be positive");
  }
  if (config.record_interval < 1) throw ConfigError("record interval must be >= 1");
  if (!(config.blowup_growth > 1.0)) throw ConfigError("blow-up growth factor must exceed 1");
  if (config.flux == FluxKind::Burgers && config.scheme != Scheme::Ader) {
    throw ConfigError("Lax-Wendroff schemes support linear flux only");
  }
  if (!std::isfinite(config.speed)) throw ConfigError("advection speed must be finite");
  if (!config.force_pairing && config.correction != default_correction(config.points)) {
    throw ConfigError(std::string("correction '") + to_string(config.correction) +
                      "' does not pair with '" + to_string(config.points) +
                      "' points (use force pairing to override)");
  }
  if (config.points == NodeKind::GaussLobattoLegendre && config.degree == 0) {
    throw ConfigError("Gauss-Lobatto-Legendre points need degree >= 1");
  }
  validate(make_problem(config));
}

ProblemSpec make_problem(const RunConfig& config) {
  ProblemSpec problem;
  problem.flux = config.flux == FluxKind::Linear ? FluxSpec::linear(config.speed)
                                                 : FluxSpec::burgers();
  problem.ic = named_initial_condition(config.ic);
  problem.bc = config.bc;
  problem.x_min = config.x_min;
  problem.x_max = config.x_max;
  return problem;
}

double compute_dt(const RunConfig& config, const Grid& grid, double wavespeed) {
  if (wavespeed < 0.0 || !std::isfinite(wavespeed)) {
    throw ConfigError("wave speed must be finite and non-negative");
  }
  if (wavespeed == 0.0) return config.t_final;
  const int n = config.degree;
  return config.cfl_safety * grid.dx / (wavespeed * (n + 1) * (2 * n + 1));
}

double truncate_step(double t, double dt, double t_final) {
  const double remaining = t_final - t;
  // Avoid leaving a sliver step of roundoff size at the end.
  if (dt >= remaining - 1e-12 * std::max(1.0, std::abs(t_final))) return remaining;
  return dt;
}

Simulation::Simulation(const RunConfig& config)
    : config_(config),
      problem_((validate(config), make_problem(config))),
      field_(sample_initial_condition(make_grid(config.x_min, config.x_max, config.n_elem),
                                      make_basis(config), problem_.ic.value)) {
  const double initial = max_abs(field_);
  blowup_bound_ = config_.blowup_growth * (initial > 0.0 ? initial : 1.0);
}

double Simulation::next_dt() const {
  const double wavespeed = problem_.flux.max_wave_speed(field_.values());
  return truncate_step(time(), compute_dt(config_, field_.grid(), wavespeed),
                       config_.t_final);
}

void Simulation::step(double dt) {
  const bool last =
      dt >= (config_.t_final - time()) - 1e-12 * std::max(1.0, std::abs(config_.t_final));
  SolutionField next = [&] {
    switch (config_.scheme) {
      case Scheme::LwD1:
        return lwfr_step(field_, problem_, dt, Dissipation::D1);
      case Scheme::LwD2:
        return lwfr_step(field_, problem_, dt, Dissipation::D2);
      case Scheme::Ader:
        break;
    }
    return ader_step(field_, problem_, dt, config_.ader);
  }();
  if (max_abs(next) > blowup_bound_) {
    throw BlowUpError("solution grew past " + std::to_string(blowup_bound_) +
                          " at t = " + std::to_string(next.time()),
                      time());
  }
  field_ = std::move(next);
  if (last) field_.set_time(config_.t_final);
  ++steps_;
}

ErrorNorms Simulation::errors() const {
  const double t = time();
  return error_norms(
      field_, [this](double x, double tt) { return exact_solution(problem_, x, tt); }, t);
}

ErrorSeries run_simulation(const RunConfig& config) {
  Simulation sim(config);
  ErrorSeries series{sample(sim)};
  try {
    while (!sim.finished()) {
      const double t_prev = sim.time();
      sim.step();
      if (sim.steps_taken() % config.record_interval == 0 || sim.finished()) {
        series.push_back(checked_sample(sim, t_prev));
      }
    }
  } catch (const BlowUpError& err) {
    throw RunAborted(err, std::move(series));
  }
  return series;
}

double Comparison::max_diff() const {
  double worst = 0.0;
  for (const DiffSample& s : diff) worst = std::max(worst, s.linf_diff);
  return worst;
}

Comparison compare_schemes(const RunConfig& a, const RunConfig& b) {
  RunConfig b_as_a = b;
  b_as_a.scheme = a.scheme;
  const auto same = [](const RunConfig& x, const RunConfig& y) {
    return x.degree == y.degree && x.n_elem == y.n_elem && x.points == y.points &&
           x.correction == y.correction && x.force_pairing == y.force_pairing &&
           x.ic == y.ic && x.flux == y.flux && x.speed == y.speed && x.bc == y.bc &&
           x.x_min == y.x_min && x.x_max == y.x_max && x.cfl_safety == y.cfl_safety &&
           x.t_final == y.t_final && x.record_interval == y.record_interval &&
           x.blowup_growth == y.blowup_growth;
  };
  if (!same(a, b_as_a)) {
    throw ConfigError("compared configurations may differ only in the scheme");
  }
  if (a.flux != FluxKind::Linear) {
    throw ConfigError("scheme comparison requires a linear problem");
  }

  Simulation sim_a(a);
  Simulation sim_b(b);
  Comparison result;
  result.errors_a.push_back(sample(sim_a));
  result.errors_b.push_back(sample(sim_b));
  try {
    while (!sim_a.finished()) {
      const double t_prev = sim_a.time();
      const double dt = sim_a.next_dt();
      sim_a.step(dt);
      sim_b.step(dt);
      const double diff = (sim_a.field().values() - sim_b.field().values()).cwiseAbs().maxCoeff();
      result.diff.push_back({sim_a.time(), diff});
      if (sim_a.steps_taken() % a.record_interval == 0 || sim_a.finished()) {
        result.errors_a.push_back(checked_sample(sim_a, t_prev));
        result.errors_b.push_back(checked_sample(sim_b, t_prev));
      }
    }
  } catch (const BlowUpError& err) {
    throw RunAborted(err, std::move(result.errors_a), std::move(result.diff));
  }
  return result;
}

std::vector<EocRow> eoc_study(const RunConfig& base, std::span<const int> levels) {
  if (levels.size() < 3) throw ConfigError("convergence study needs at least 3 levels");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] <= levels[i - 1]) {
      throw ConfigError("refinement levels must be strictly increasing");
    }
  }
  std::vector<EocRow> rows;
  for (const int n_elem : levels) {
    RunConfig config = base;
    config.n_elem = n_elem;
    config.record_interval = std::numeric_limits<int>::max();
    const ErrorSeries series = run_simulation(config);
    EocRow row{n_elem, series.back().l2_error, std::numeric_limits<double>::quiet_NaN()};
    if (!rows.empty()) {
      const EocRow& coarse = rows.back();
      row.order = std::log(coarse.l2_error / row.l2_error) /
                  std::log(static_cast<double>(n_elem) / coarse.n_elem);
    }
    rows.push_back(row);
  }
  return rows;
}

bool is_stable(const RunConfig& config, const StabilityCriterion& criterion) {
  Simulation sim(config);
  const double bound = criterion.growth_limit * std::max(max_abs(sim.field()), 1e-300);
  try {
    while (!sim.finished()) {
      sim.step();
      if (max_abs(sim.field()) > bound) return false;
    }
  } catch (const BlowUpError&) {
    return false;
  } catch (const NumericalError&) {
    // Diverging predictor iteration.
    return false;
  }
  return true;
}

std::vector<StabilityThreshold> stability_scan(const RunConfig& config,
                                               std::span<const double> cfl_grid,
                                               std::span<const Scheme> schemes,
                                               const StabilityCriterion& criterion) {
  if (cfl_grid.empty()) throw ConfigError("stability scan needs a non-empty cfl grid");
  for (std::size_t i = 1; i < cfl_grid.size(); ++i) {
    if (cfl_grid[i] <= cfl_grid[i - 1]) {
      throw ConfigError("cfl grid must be strictly increasing");
    }
  }
  // Stable values are assumed to form a prefix of the grid; bisect for its end.
  std::vector<StabilityThreshold> thresholds;
  for (const Scheme scheme : schemes) {
    RunConfig c = config;
    c.scheme = scheme;
    const auto stable_at = [&](std::size_t i) {
      c.cfl_safety = cfl_grid[i];
      return is_stable(c, criterion);
    };
    double threshold = 0.0;
    if (stable_at(0)) {
      std::size_t lo = 0;                // stable
      std::size_t hi = cfl_grid.size();  // first unstable, or one past the end
      if (stable_at(hi - 1)) {
        lo = hi - 1;
      } else {
        hi = hi - 1;
        while (hi - lo > 1) {
          const std::size_t mid = lo + (hi - lo) / 2;
          (stable_at(mid) ? lo : hi) = mid;
        }
      }
      threshold = cfl_grid[lo];
    }
    thresholds.push_back({scheme, threshold});
  }
  return thresholds;
}

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Ader:
      return "ader";
    case Scheme::LwD1:
      return "lw-d1";
    case Scheme::LwD2:
      return "lw-d2";
  }
  return "?";
}

const char* to_string(FluxKind kind) {
  return kind == FluxKind::Linear ? "linear" : "burgers";
}

}  // namespace fr1d
