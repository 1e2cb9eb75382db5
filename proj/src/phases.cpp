#include "geoloop/phases.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace geoloop {
namespace {

double angle_between(const Vector3& a, const Vector3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Sum of signed fan triangles is independent of the pivot modulo 4pi, but a
// pivot antipodal to some path point makes those triangles degenerate
// (0/0 excess). Pick the candidate that stays farthest from every antipode.
Vector3 choose_pivot(const std::vector<Vector3>& pts) {
  std::vector<Vector3> candidates;
  candidates.push_back(pts.front());
  Vector3 centroid = Vector3::Zero();
  for (const auto& p : pts) centroid += p;
  if (centroid.norm() > 1e-6) {
    candidates.push_back(centroid.normalized());
    candidates.push_back(-centroid.normalized());
  }
  for (int k = 0; k < 3; ++k) {
    candidates.push_back(Vector3::Unit(k));
    candidates.push_back(-Vector3::Unit(k));
  }
  const double r = 1.0 / std::sqrt(3.0);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) candidates.push_back(Vector3(sx * r, sy * r, sz * r));

  Vector3 best = candidates.front();
  double best_clearance = -1.0;
  for (const auto& c : candidates) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) clearance = std::min(clearance, 1.0 + c.dot(p));
    if (clearance > best_clearance) {
      best_clearance = clearance;
      best = c;
    }
  }
  return best;
}

}  // namespace

bool is_cyclic(const Schedule& sched, const QubitState& initial, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("is_cyclic: tol must be > 0");
  const QubitState final_state = propagate(sched, initial);
  return std::abs(initial.inner(final_state)) >= 1.0 - tol;
}

double total_phase(const Schedule& sched, const QubitState& initial) {
  const QubitState final_state = propagate(sched, initial);
  const Complex overlap = initial.inner(final_state);
  if (std::abs(overlap) < 1.0 - kCyclicTol) {
    throw NonCyclic("initial state is not cyclic under the schedule (|overlap| = " +
                    std::to_string(std::abs(overlap)) + ")");
  }
  return wrap_phase(std::arg(overlap));
}

std::vector<double> dynamical_phase_terms(const Schedule& sched, const QubitState& initial) {
  std::vector<double> terms;
  terms.reserve(sched.segments.size());
  QubitState state = initial;
  for (const auto& seg : sched.segments) {
    const Unitary2 u = segment_unitary(seg);
    // <psi|(omega/2) n.sigma|psi> = (omega/2) n.r
    const double energy = 0.5 * seg.omega * seg.axis.dot(bloch_vector(state).vec());
    terms.push_back(-energy * seg.duration);
    state = apply(u, state);
  }
  return terms;
}

double dynamical_phase(const Schedule& sched, const QubitState& initial) {
  double sum = 0.0;
  for (double t : dynamical_phase_terms(sched, initial)) sum += t;
  return sum;
}

PhaseDecomposition geometric_phase(const Schedule& sched, const QubitState& initial) {
  PhaseDecomposition out;
  out.total = total_phase(sched, initial);
  out.dynamical = dynamical_phase(sched, initial);
  out.geometric = wrap_phase(out.total - out.dynamical);
  return out;
}

BlochPath sample_path(const Schedule& sched, const QubitState& initial, int samples_per_segment) {
  if (samples_per_segment < 2) throw InvalidArgument("sample_path: samples_per_segment must be >= 2");
  BlochPath path;
  path.samples.push_back({0.0, bloch_vector(initial)});
  QubitState entering = initial;
  double t0 = 0.0;
  for (const auto& seg : sched.segments) {
    validate(seg);
    if (seg.duration == 0.0) continue;
    for (int k = 1; k < samples_per_segment; ++k) {
      const double dt = seg.duration * k / (samples_per_segment - 1);
      ControlSegment partial = seg;
      partial.duration = dt;
      path.samples.push_back({t0 + dt, bloch_vector(apply(segment_unitary(partial), entering))});
    }
    entering = apply(segment_unitary(seg), entering);
    t0 += seg.duration;
  }
  return path;
}

double signed_triangle_area(const Vector3& a, const Vector3& b, const Vector3& c) {
  const double sa = angle_between(b, c);
  const double sb = angle_between(c, a);
  const double sc = angle_between(a, b);
  const double s = 0.5 * (sa + sb + sc);
  const double prod = std::tan(0.5 * s) * std::tan(0.5 * (s - sa)) * std::tan(0.5 * (s - sb)) *
                      std::tan(0.5 * (s - sc));
  const double excess = 4.0 * std::atan(std::sqrt(std::max(0.0, prod)));
  const double orient = a.dot(b.cross(c));
  if (orient > 0.0) return excess;
  if (orient < 0.0) return -excess;
  return 0.0;
}

double solid_angle(const BlochPath& path) {
  if (path.samples.empty()) throw OpenPath("solid_angle: empty path");
  std::vector<Vector3> pts;
  pts.reserve(path.samples.size());
  for (const auto& s : path.samples) pts.push_back(s.point.vec().normalized());
  if ((pts.front() - pts.back()).cwiseAbs().maxCoeff() > kClosureTol) {
    throw OpenPath("solid_angle: path is not closed");
  }
  if (pts.size() < 3) return 0.0;

  const Vector3 pivot = choose_pivot(pts);
  double total = 0.0;
  // The final edge back to the first point is implied by closure.
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += signed_triangle_area(pivot, pts[i], pts[i + 1]);
  }
  total += signed_triangle_area(pivot, pts.back(), pts.front());

  // Reduce onto (-2pi, 2pi].
  double r = std::remainder(total, 4.0 * kPi);
  if (r <= -2.0 * kPi) r += 4.0 * kPi;
  return r;
}

}  // namespace geoloop
