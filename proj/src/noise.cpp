#include "geoloop/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace geoloop {
namespace {

void validate(const NoiseSpec& spec) {
  if (!(spec.sigma_omega >= 0.0) || !(spec.sigma_tau >= 0.0) || !std::isfinite(spec.sigma_omega) ||
      !std::isfinite(spec.sigma_tau)) {
    throw InvalidArgument("noise sigmas must be finite and >= 0");
  }
  if (spec.trials < 1) throw InvalidArgument("noise trials must be >= 1");
}

// One generator per trial so trials can be evaluated in any order.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Schedule perturb_schedule(const Schedule& sched, const NoiseSpec& spec, std::uint64_t trial_index) {
  validate(spec);
  Schedule out = sched;
  if (spec.sigma_omega == 0.0 && spec.sigma_tau == 0.0) return out;
  auto engine = trial_engine(spec.seed, trial_index);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& seg : out.segments) {
    const double eps = normal(engine);
    const double delta = normal(engine);
    seg.omega = std::max(0.0, seg.omega * (1.0 + spec.sigma_omega * eps));
    seg.duration = std::max(0.0, seg.duration * (1.0 + spec.sigma_tau * delta));
  }
  return out;
}

SweepResult fidelity_sweep(const Schedule& sched, const Unitary2& target, const NoiseSpec& spec) {
  validate(spec);
  SweepResult r;
  r.spec = spec;
  r.fidelities.reserve(static_cast<std::size_t>(spec.trials));
  const Matrix2 target_dag = target.matrix().adjoint();
  for (int k = 0; k < spec.trials; ++k) {
    const Unitary2 u = schedule_unitary(perturb_schedule(sched, spec, static_cast<std::uint64_t>(k)));
    r.fidelities.push_back(std::abs((target_dag * u.matrix()).trace()) / 2.0);
  }
  const double n = static_cast<double>(r.fidelities.size());
  r.mean = std::accumulate(r.fidelities.begin(), r.fidelities.end(), 0.0) / n;
  r.min = *std::min_element(r.fidelities.begin(), r.fidelities.end());
  if (r.fidelities.size() > 1) {
    double ss = 0.0;
    for (double f : r.fidelities) ss += (f - r.mean) * (f - r.mean);
    r.std = std::sqrt(ss / (n - 1.0));
  }
  return r;
}

}  // namespace geoloop
