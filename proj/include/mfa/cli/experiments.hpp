#pragma once

#include <string>
#include <vector>

#include "mfa/cli/config.hpp"
#include "mfa/fourier/periodic_function.hpp"
#include "mfa/svf/analysis.hpp"
#include "mfa/svf/selection.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa::cli {

// Outcome of one verb: CSV data, a human-readable report and the exit code
// (0 pass, 1 assertion failure).
struct RunResult {
  std::string csv;
  std::string report;
  int exit_code = 0;
};

struct ResolvedSvf {
  std::string name;
  SetValuedFunction f;
  MonotoneFunction variation;
  double sup_norm = 0.0;
  bool exact_variation = false;  // false: sampled on a dyadic grid
};

// The fixture named in cfg (with its eps and jump settings) or the inline svf.
ResolvedSvf resolve_svf(const ExperimentConfig& cfg);

// Step approximation of v_F from a dyadic grid of the given depth with the
// jumps forced. One-sided limits are read at the neighbouring grid nodes.
MonotoneFunction sampled_variation(const SetValuedFunction& f, int depth, const Metric& m = {});

// "square-wave", "sawtooth" (jump at cfg.jump), "monotone-step" or "trig".
PeriodicFunction scalar_by_name(const std::string& name, double jump);

SelectionFamily family_for(const SetValuedFunction& f, const ExperimentConfig& cfg);

// Columns: n,x,target,distance,family_size. The target is F(x) at continuity
// points and A_F(x) at declared jumps.
RunResult run_convergence(const ExperimentConfig& cfg);

// Scalar functions: n,x,observed,bound_rhs,delta,pass.
// Set-valued functions: n,x,observed,unit_bound,K,bound_rhs,delta,pass.
RunResult run_bound_check(const ExperimentConfig& cfg);

// "balls", "lines" or "integral-inclusion"; the report lists one PASS or FAIL
// line per asserted fact.
RunResult run_example(const std::string& name, const ExperimentConfig& cfg);

// Columns y0..y{d-1}, one row per point of the integral's value set.
RunResult run_integral(const ExperimentConfig& cfg);

// Columns: hausdorff,directed_ab,directed_ba for sets.A and sets.B, or for the
// fixture values at the first two x_grid entries.
RunResult run_hausdorff(const ExperimentConfig& cfg);

// Columns: selection,seed_x,x,y0..y{d-1} on x_grid (or the probe grid when
// x_grid has fewer than two entries).
RunResult run_selections(const ExperimentConfig& cfg);

std::string format_double(double v);

}  // namespace mfa::cli
