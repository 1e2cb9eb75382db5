#include "geoloop/core.hpp"

#include <cmath>
#include <string>

namespace geoloop {
namespace {

constexpr double kNormTol = 1e-9;

void require_normalized(const Eigen::Vector2cd& amps) {
  const double norm2 = amps.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTol) {
    throw InvalidArgument("qubit amplitudes are not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }
}

double reduce_chi(double chi) {
  if (chi >= 0.0 && chi <= kPi) return chi;
  double r = std::fmod(chi, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  return r;
}

double reduce_phi(double phi) {
  if (phi >= -kPi && phi <= kPi) return phi;
  return wrap_phase(phi);
}

}  // namespace

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

QubitState::QubitState(Complex amp_up, Complex amp_down) : amps_(amp_up, amp_down) {
  require_normalized(amps_);
  amps_ /= amps_.norm();
}

QubitState QubitState::with_global_phase(double phase) const {
  return QubitState(Eigen::Vector2cd(std::polar(1.0, phase) * amps_));
}

QubitState state_from_angles(double chi, double phi, Branch branch) {
  if (!std::isfinite(chi) || !std::isfinite(phi)) {
    throw InvalidArgument("state_from_angles: angles must be finite");
  }
  chi = reduce_chi(chi);
  phi = reduce_phi(phi);
  const Complex left = std::polar(1.0, -phi / 2.0);
  const Complex right = std::polar(1.0, phi / 2.0);
  const double c = std::cos(chi / 2.0);
  const double s = std::sin(chi / 2.0);
  if (branch == Branch::plus) return {left * c, right * s};
  return {-left * s, right * c};
}

BlochVector bloch_vector(const Eigen::Vector2cd& amplitudes) {
  require_normalized(amplitudes);
  const Complex cross = std::conj(amplitudes(0)) * amplitudes(1);
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(amplitudes(0)) - std::norm(amplitudes(1))};
}

BlochVector bloch_vector(const QubitState& state) { return bloch_vector(state.amplitudes()); }

void validate(const ControlSegment& seg) {
  if (!seg.axis.allFinite() || std::abs(seg.axis.norm() - 1.0) > kExactTol) {
    throw InvalidArgument("control segment axis must be a unit vector");
  }
  if (!std::isfinite(seg.omega) || seg.omega < 0.0) {
    throw InvalidArgument("control segment omega must be finite and >= 0");
  }
  if (!std::isfinite(seg.duration) || seg.duration < 0.0) {
    throw InvalidArgument("control segment duration must be finite and >= 0");
  }
}

double Schedule::total_duration() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.duration;
  return total;
}

Matrix2 pauli_dot(const Vector3& n) {
  return n.x() * sigma_x() + n.y() * sigma_y() + n.z() * sigma_z();
}

Matrix2 segment_hamiltonian(const ControlSegment& seg) { return 0.5 * seg.omega * pauli_dot(seg.axis); }

Unitary2 segment_unitary(const ControlSegment& seg) {
  validate(seg);
  const double half = 0.5 * seg.angle();
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Vector3& n = seg.axis;
  // cos(h) I - i sin(h) (nx X + ny Y + nz Z), written out entrywise.
  Matrix2 m;
  m(0, 0) = Complex(c, -s * n.z());
  m(0, 1) = Complex(-s * n.y(), -s * n.x());
  m(1, 0) = Complex(s * n.y(), -s * n.x());
  m(1, 1) = Complex(c, s * n.z());
  return Unitary2(m);
}

Unitary2 schedule_unitary(const Schedule& sched) {
  Unitary2 total;
  for (const auto& seg : sched.segments) total = segment_unitary(seg) * total;
  return total;
}

QubitState apply(const Unitary2& u, const QubitState& state) {
  return QubitState(Eigen::Vector2cd(u.matrix() * state.amplitudes()));
}

QubitState propagate(const Schedule& sched, const QubitState& initial) {
  QubitState state = initial;
  for (const auto& seg : sched.segments) state = apply(segment_unitary(seg), state);
  return state;
}

}  // namespace geoloop
