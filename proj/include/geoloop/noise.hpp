#pragma once

// Exploratory control-error model: every segment gets independent Gaussian
// multiplicative errors omega -> omega (1 + eps), tau -> tau (1 + delta),
// eps ~ N(0, sigma_omega), delta ~ N(0, sigma_tau). Axes are not perturbed.

#include <cstdint>
#include <vector>

#include "geoloop/core.hpp"

namespace geoloop {

struct NoiseSpec {
  double sigma_omega = 0.0;
  double sigma_tau = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
};

struct SweepResult {
  /// Ordered by trial index.
  std::vector<double> fidelities;
  double mean = 0.0;
  double min = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single trial.
  double std = 0.0;
  NoiseSpec spec;
};

/// Deterministic in (spec.seed, trial_index). Perturbed durations and
/// frequencies are clamped at 0.
Schedule perturb_schedule(const Schedule& sched, const NoiseSpec& spec, std::uint64_t trial_index);

/// Trace fidelity |tr(target^dagger U_trial)| / 2 for each trial.
SweepResult fidelity_sweep(const Schedule& sched, const Unitary2& target, const NoiseSpec& spec);

}  // namespace geoloop
