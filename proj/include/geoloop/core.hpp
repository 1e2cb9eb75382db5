#pragma once

// Exact single-qubit substrate: states, Bloch vectors, piecewise-constant
// Pauli-axis drives and their closed-form propagators.
//
// Conventions: hbar = 1. A segment with axis n, angular frequency omega and
// duration tau has Hamiltonian H = (omega/2) n.sigma and propagator
// U = exp(-i H tau) = cos(theta/2) I - i sin(theta/2) n.sigma, theta = omega tau.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geoloop/errors.hpp"

namespace geoloop {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance used for algebraic identities throughout the library.
inline constexpr double kExactTol = 1e-12;

/// Maps an angle onto (-pi, pi].
double wrap_phase(double angle);

/// Largest absolute entry of a complex matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Normalized pure state of one qubit, amplitudes in the (|up>, |down>) basis.
class QubitState {
 public:
  /// Rejects amplitudes whose squared norm differs from 1 by more than 1e-9,
  /// then rescales to unit norm.
  QubitState(Complex amp_up, Complex amp_down);
  explicit QubitState(const Eigen::Vector2cd& amps) : QubitState(amps(0), amps(1)) {}

  static QubitState up() { return {1.0, 0.0}; }
  static QubitState down() { return {0.0, 1.0}; }

  Complex amp_up() const { return amps_(0); }
  Complex amp_down() const { return amps_(1); }
  const Eigen::Vector2cd& amplitudes() const { return amps_; }

  /// <this|other>
  Complex inner(const QubitState& other) const { return amps_.dot(other.amps_); }

  QubitState with_global_phase(double phase) const;

 private:
  Eigen::Vector2cd amps_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  Vector3 vec() const { return {x, y, z}; }
  static BlochVector from(const Vector3& v) { return {v.x(), v.y(), v.z()}; }
};

enum class Branch { plus, minus };

/// Cyclic-state parameterization on the Bloch sphere.
///   plus:  ( e^{-i phi/2} cos(chi/2),  e^{i phi/2} sin(chi/2))
///   minus: (-e^{-i phi/2} sin(chi/2),  e^{i phi/2} cos(chi/2))
/// Angles outside the nominal ranges are reduced first: chi into [0, 2pi) and
/// phi into (-pi, pi]. The reduction can flip the global sign of the result,
/// which is the only effect it has.
QubitState state_from_angles(double chi, double phi, Branch branch);

/// x = 2 Re(a* b), y = 2 Im(a* b), z = |a|^2 - |b|^2.
BlochVector bloch_vector(const QubitState& state);
/// Same map on raw amplitudes; throws InvalidArgument when |a|^2+|b|^2 is
/// off unity by more than 1e-9.
BlochVector bloch_vector(const Eigen::Vector2cd& amplitudes);

/// One constant piece of a drive, H = (omega/2) axis.sigma for `duration`.
struct ControlSegment {
  Vector3 axis = Vector3::UnitZ();
  double omega = 0.0;
  double duration = 0.0;

  double angle() const { return omega * duration; }
  bool operator==(const ControlSegment& other) const = default;
};

/// Throws InvalidArgument unless |axis| = 1 (1e-12), omega >= 0 and
/// duration >= 0, all finite.
void validate(const ControlSegment& seg);

struct Schedule {
  std::vector<ControlSegment> segments;
  std::string label;

  double total_duration() const;
  bool operator==(const Schedule& other) const = default;
};

/// Dense N x N unitary. Construction checks ||U^dagger U - I||_max <= 1e-9;
/// the closed-form constructors in this library land within 1e-12.
template <int N>
class Unitary {
 public:
  using Matrix = Eigen::Matrix<Complex, N, N>;

  Unitary() : m_(Matrix::Identity()) {}
  explicit Unitary(const Matrix& m) : m_(m) {
    if (!m_.allFinite() || defect(m_) > 1e-9) {
      throw NotUnitary("matrix is not unitary (defect " + std::to_string(defect(m_)) + ")");
    }
  }

  static Unitary identity() { return Unitary(); }

  const Matrix& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Unitary adjoint() const { return Unitary(m_.adjoint().eval(), Trusted{}); }
  double unitarity_defect() const { return defect(m_); }

  friend Unitary operator*(const Unitary& a, const Unitary& b) {
    return Unitary((a.m_ * b.m_).eval(), Trusted{});
  }

  static double defect(const Matrix& m) { return max_abs(m.adjoint() * m - Matrix::Identity()); }

 private:
  struct Trusted {};
  Unitary(const Matrix& m, Trusted) : m_(m) {}

  Matrix m_;
};

using Unitary2 = Unitary<2>;
using Unitary4 = Unitary<4>;

inline const Matrix2& sigma_x() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}
inline const Matrix2& sigma_y() {
  static const Matrix2 m = (Matrix2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}
inline const Matrix2& sigma_z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}

/// n.sigma for a real 3-vector.
Matrix2 pauli_dot(const Vector3& n);

/// (omega/2) axis.sigma
Matrix2 segment_hamiltonian(const ControlSegment& seg);

/// Closed-form exp(-i H tau); throws InvalidArgument on an invalid segment.
Unitary2 segment_unitary(const ControlSegment& seg);

/// Time-ordered product U_k ... U_2 U_1, first segment applied first.
Unitary2 schedule_unitary(const Schedule& sched);

QubitState apply(const Unitary2& u, const QubitState& state);

QubitState propagate(const Schedule& sched, const QubitState& initial);

}  // namespace geoloop
