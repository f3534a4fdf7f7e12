#pragma once

#include <span>
#include <string>
#include <vector>

#include "fr1d/ader.hpp"
#include "fr1d/basis.hpp"
#include "fr1d/errors.hpp"
#include "fr1d/lwfr.hpp"
#include "fr1d/mesh_field.hpp"
#include "fr1d/physics.hpp"

namespace fr1d {

enum class Scheme { Ader, LwD1, LwD2 };
enum class FluxKind { Linear, Burgers };

struct RunConfig {
  int degree = 1;
  int n_elem = 120;
  NodeKind points = NodeKind::GaussLegendre;
  CorrectionKind correction = CorrectionKind::Radau;
  bool force_pairing = false;
  Scheme scheme = Scheme::Ader;
  std::string ic = "wavepacket";
  FluxKind flux = FluxKind::Linear;
  double speed = 5.0;
  BoundaryKind bc = BoundaryKind::Periodic;
  double x_min = -1.0;
  double x_max = 1.0;
  double cfl_safety = 0.9;
  double t_final = 0.4;
  int record_interval = 10;  // steps between error samples
  // A step that leaves max |u| above this multiple of the initial max |u|
  // (or of 1 for zero data) counts as a blow-up, as does any non-finite value.
  double blowup_growth = 1e8;
  AderOptions ader;
};

/// Throws ConfigError describing the first inconsistency found.
void validate(const RunConfig& config);

ProblemSpec make_problem(const RunConfig& config);

/// dt = cfl_safety * dx / (wavespeed * (N + 1) * (2N + 1)); t_final when the
/// wavespeed is 0. cfl_safety = 1 stays below the Fourier limits of ADER,
/// LW-D2 and LW-D1 for every supported degree.
double compute_dt(const RunConfig& config, const Grid& grid, double wavespeed);

/// Shortens `dt` so that the step starting at t ends exactly at t_final.
double truncate_step(double t, double dt, double t_final);

struct ErrorSample {
  double time = 0.0;
  double l2_error = 0.0;
  double linf_error = 0.0;
};
using ErrorSeries = std::vector<ErrorSample>;

struct DiffSample {
  double time = 0.0;
  double linf_diff = 0.0;
};
using DiffSeries = std::vector<DiffSample>;

/// A run that blew up. Carries whatever was recorded before the failure.
class RunAborted : public BlowUpError {
 public:
  RunAborted(const BlowUpError& cause, ErrorSeries partial_errors,
             DiffSeries partial_diff = {})
      : BlowUpError(cause.what(), cause.last_stable_time()),
        partial_errors_(std::move(partial_errors)),
        partial_diff_(std::move(partial_diff)) {}

  const ErrorSeries& partial_errors() const { return partial_errors_; }
  const DiffSeries& partial_diff() const { return partial_diff_; }

 private:
  ErrorSeries partial_errors_;
  DiffSeries partial_diff_;
};

/// One scheme advancing one solution from t = 0 to t_final.
class Simulation {
 public:
  explicit Simulation(const RunConfig& config);

  const RunConfig& config() const { return config_; }
  const ProblemSpec& problem() const { return problem_; }
  const SolutionField& field() const { return field_; }
  double time() const { return field_.time(); }
  int steps_taken() const { return steps_; }
  bool finished() const { return field_.time() >= config_.t_final; }

  /// CFL step for the current state, truncated to land on t_final.
  double next_dt() const;
  /// Advances by dt with the configured scheme. Throws BlowUpError.
  void step(double dt);
  void step() { step(next_dt()); }

  ErrorNorms errors() const;

 private:
  RunConfig config_;
  ProblemSpec problem_;
  SolutionField field_;
  double blowup_bound_;
  int steps_ = 0;
};

/// Evolves to t_final, sampling norms at t = 0, every record_interval steps
/// and at t_final. Throws RunAborted on blow-up.
ErrorSeries run_simulation(const RunConfig& config);

struct Comparison {
  DiffSeries diff;
  ErrorSeries errors_a;
  ErrorSeries errors_b;

  double max_diff() const;
};

/// Runs two configurations that differ only in the scheme in lockstep with
/// a shared dt sequence; the nodal max difference is recorded after every
/// step. Throws ConfigError for any other mismatch, RunAborted on blow-up.
Comparison compare_schemes(const RunConfig& a, const RunConfig& b);

struct EocRow {
  int n_elem = 0;
  double l2_error = 0.0;
  double order = 0.0;  // NaN for the coarsest level
};

/// Final-time L2 errors for each element count; order between consecutive
/// levels is log(e_coarse / e_fine) / log(n_fine / n_coarse).
std::vector<EocRow> eoc_study(const RunConfig& base, std::span<const int> levels);

struct StabilityCriterion {
  // Stable runs stay finite and keep max |u| below growth_limit times the
  // initial max |u|.
  double growth_limit = 10.0;
};

/// True if a run of `config` up to t_final is stable under `criterion`.
bool is_stable(const RunConfig& config, const StabilityCriterion& criterion = {});

struct StabilityThreshold {
  Scheme scheme;
  double cfl_safety;  // largest stable grid value; 0 if none is stable
};

/// Largest stable value of the increasing `cfl_grid` for each scheme, found
/// by bisection (stability is assumed monotone in the cfl factor).
std::vector<StabilityThreshold> stability_scan(const RunConfig& config,
                                               std::span<const double> cfl_grid,
                                               std::span<const Scheme> schemes,
                                               const StabilityCriterion& criterion = {});

const char* to_string(Scheme scheme);
const char* to_string(FluxKind kind);

}  // namespace fr1d
