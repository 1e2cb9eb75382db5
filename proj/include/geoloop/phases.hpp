#pragma once

// Phase bookkeeping for cyclic evolutions: total, dynamical and geometric
// phases, Bloch-path sampling and the enclosed solid angle.

#include <vector>

#include "geoloop/core.hpp"

namespace geoloop {

inline constexpr double kCyclicTol = 1e-9;
inline constexpr double kClosureTol = 1e-6;

/// total = dynamical + geometric (mod 2pi). `total` and `geometric` are in
/// (-pi, pi]; `dynamical` is unwrapped.
struct PhaseDecomposition {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
};

struct PathSample {
  double time = 0.0;
  BlochVector point;
};

struct BlochPath {
  std::vector<PathSample> samples;
};

/// |<initial|U|initial>| >= 1 - tol.
bool is_cyclic(const Schedule& sched, const QubitState& initial, double tol = kCyclicTol);

/// arg <initial|final> in (-pi, pi]. Throws NonCyclic.
double total_phase(const Schedule& sched, const QubitState& initial);

/// Per-segment contributions -<psi_k|H_k|psi_k> tau_k, with psi_k the state
/// entering segment k. <H> is conserved inside a constant-H segment, so each
/// term is the exact time integral over that segment.
std::vector<double> dynamical_phase_terms(const Schedule& sched, const QubitState& initial);

/// Sum of dynamical_phase_terms. Defined for any evolution, cyclic or not.
double dynamical_phase(const Schedule& sched, const QubitState& initial);

/// Throws NonCyclic.
PhaseDecomposition geometric_phase(const Schedule& sched, const QubitState& initial);

/// Bloch vector sampled along the evolution. Every non-empty segment
/// contributes `samples_per_segment` equally spaced points including both of
/// its endpoints; shared boundary points appear once and zero-duration
/// segments are skipped so that times are strictly increasing. The result has
/// 1 + (number of non-empty segments) * (samples_per_segment - 1) samples.
BlochPath sample_path(const Schedule& sched, const QubitState& initial, int samples_per_segment);

/// Signed solid angle enclosed by a closed Bloch path, in (-2pi, 2pi].
/// Counterclockwise traversal seen from outside the sphere is positive.
/// Throws OpenPath if first and last samples differ by more than 1e-6.
double solid_angle(const BlochPath& path);

/// Signed area of the spherical triangle (a, b, c) on the unit sphere,
/// l'Huilier magnitude with the orientation of det[a b c].
double signed_triangle_area(const Vector3& a, const Vector3& b, const Vector3& c);

}  // namespace geoloop
