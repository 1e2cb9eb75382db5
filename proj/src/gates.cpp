#include "geoloop/gates.hpp"

#include <cmath>
#include <string>

namespace geoloop {

Unitary2 u_gate(double gamma, double chi, double phi) {
  const Complex eg = std::polar(1.0, gamma);
  const double c2 = std::pow(std::cos(chi / 2.0), 2);
  const double s2 = std::pow(std::sin(chi / 2.0), 2);
  const Complex off = Complex(0.0, 1.0) * std::sin(gamma) * std::sin(chi);
  Matrix2 m;
  m(0, 0) = eg * c2 + std::conj(eg) * s2;
  m(0, 1) = off * std::polar(1.0, -phi);
  m(1, 0) = off * std::polar(1.0, phi);
  m(1, 1) = eg * s2 + std::conj(eg) * c2;
  return Unitary2(m);
}

Schedule single_loop_schedule(double chi, double omega, double omega2) {
  if (!(chi >= 0.0 && chi <= kPi / 2.0)) {
    throw ChiOutOfRange("chi out of range: " + std::to_string(chi) + " not in [0, pi/2]");
  }
  if (!(omega > 0.0) || !(omega2 > 0.0) || !std::isfinite(omega) || !std::isfinite(omega2)) {
    throw InvalidArgument("single_loop_schedule: omega and omega2 must be positive");
  }
  Schedule s;
  s.label = "single-loop chi=" + std::to_string(chi);
  s.segments = {
      {Vector3::UnitZ(), omega, kPi / (2.0 * omega)},
      {Vector3::UnitX(), omega2, kPi / omega2},
      {Vector3::UnitZ(), omega, kPi / (2.0 * omega)},
      // H4 = -(omega2/2) sigma_y, kept as a positive frequency about -y.
      {Vector3(0.0, -1.0, 0.0), omega2, (kPi - 2.0 * chi) / omega2},
  };
  return s;
}

Unitary2 u_chi(double chi) {
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  Matrix2 m;
  m << Complex(0, -c), Complex(0, -s), Complex(0, -s), Complex(0, c);
  return Unitary2(m);
}

GateReport compare_gates(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw DimensionMismatch("compare_gates: " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                            " vs " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  const auto dim = u.rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
  GateReport r;
  r.max_entry_deviation = dim == 0 ? 0.0 : max_abs(u - v);
  r.trace_fidelity = dim == 0 ? 1.0 : std::abs((u.adjoint() * v).trace()) / static_cast<double>(dim);
  if (dim > 0) {
    r.unitarity_defect = std::max(max_abs(u.adjoint() * u - eye), max_abs(v.adjoint() * v - eye));
  }
  return r;
}

double commutator_norm(const Unitary2& u, const Unitary2& v) {
  return (u.matrix() * v.matrix() - v.matrix() * u.matrix()).norm();
}

}  // namespace geoloop
