#pragma once

#include <Eigen/Dense>

#include "geoloop/core.hpp"

namespace geoloop {

/// Result of comparing two gate matrices.
///   max_entry_deviation: max |U_ij - V_ij|, global phase included.
///   trace_fidelity:      |tr(U^dagger V)| / dim, global phase ignored.
///   unitarity_defect:    larger of the two inputs' ||M^dagger M - I||_max.
struct GateReport {
  double max_entry_deviation = 0.0;
  double trace_fidelity = 1.0;
  double unitarity_defect = 0.0;
};

/// Gate that multiplies the cyclic pair state_from_angles(chi, phi, +/-) by
/// e^{+/- i gamma}.
Unitary2 u_gate(double gamma, double chi, double phi);

/// The four-segment loop whose plus state starts at polar angle chi, phi = 0:
///   (z, omega,  pi/(2 omega))
///   (x, omega2, pi/omega2)
///   (z, omega,  pi/(2 omega))
///   (-y, omega2, (pi - 2 chi)/omega2)
/// Throws ChiOutOfRange unless chi is in [0, pi/2]; InvalidArgument unless
/// both frequencies are positive.
Schedule single_loop_schedule(double chi, double omega, double omega2);

/// [[-i cos chi, -i sin chi], [-i sin chi, i cos chi]]; accepts any chi.
Unitary2 u_chi(double chi);

/// Throws DimensionMismatch when the shapes differ.
GateReport compare_gates(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

template <int N>
GateReport compare_gates(const Unitary<N>& u, const Unitary<N>& v) {
  return compare_gates(Eigen::MatrixXcd(u.matrix()), Eigen::MatrixXcd(v.matrix()));
}

/// Frobenius norm of uv - vu.
double commutator_norm(const Unitary2& u, const Unitary2& v);

}  // namespace geoloop
