#include "geoloop/twoqubit.hpp"

#include <cmath>

#include "geoloop/gates.hpp"

namespace geoloop {
namespace {

// +1 for up, -1 for down.
double z_eigen(int bit) { return bit == 0 ? 1.0 : -1.0; }

}  // namespace

Matrix4 nmr_hamiltonian(const NmrParams& p) {
  Matrix4 h = Matrix4::Zero();
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < 2; ++a) {
      const double za = z_eigen(a);
      const double zb = z_eigen(b);
      h(a + 2 * b, a + 2 * b) = 0.5 * (p.omega_a * za + p.omega_b * zb + kPi * p.coupling_j * za * zb);
    }
  }
  return h;
}

double effective_field_a(const NmrParams& p, BState b_state) {
  if (!p.accessory) throw MissingAccessory("effective_field_a: no accessory field set");
  const double sign = b_state == BState::up ? 1.0 : -1.0;
  return p.omega_a - *p.accessory + sign * kPi * p.coupling_j;
}

double conditional_accessory(const NmrParams& p) { return p.omega_a - kPi * p.coupling_j; }

ConditionalSchedule two_qubit_schedule(double omega, const NmrParams& p, ConditioningMode mode) {
  if (!(p.coupling_j > 0.0) || !std::isfinite(p.coupling_j)) {
    throw InvalidCoupling("two_qubit_schedule: coupling J must be > 0");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument("two_qubit_schedule: omega must be > 0");
  }
  NmrParams q = p;
  if (!q.accessory) q.accessory = conditional_accessory(q);

  ConditionalSchedule s;
  s.mode = mode;
  s.field_up = effective_field_a(q, BState::up);
  s.field_down = effective_field_a(q, BState::down);
  s.label = mode == ConditioningMode::natural ? "conditional phase (natural)" : "conditional phase (line-selective)";
  const ControlSegment pulse{Vector3::UnitY(), omega, kPi / (2.0 * omega)};
  s.steps = {PulseStep{pulse}, CouplingStep{1.0 / (2.0 * p.coupling_j)}, PulseStep{pulse}};
  return s;
}

ConditionalSchedule controlled_u_schedule(double chi, double omega, double omega2) {
  const Schedule loop = single_loop_schedule(chi, omega, omega2);
  ConditionalSchedule s;
  s.mode = ConditioningMode::line_selective;
  s.label = "controlled-U " + loop.label;
  for (const auto& seg : loop.segments) s.steps.emplace_back(PulseStep{seg});
  return s;
}

Unitary2 conditional_block(const ConditionalSchedule& sched, BState b_state) {
  const bool frozen = sched.mode == ConditioningMode::line_selective && b_state == BState::down;
  if (frozen) return Unitary2::identity();
  const double field = b_state == BState::up ? sched.field_up : sched.field_down;
  Unitary2 total;
  for (const auto& step : sched.steps) {
    if (const auto* pulse = std::get_if<PulseStep>(&step)) {
      total = segment_unitary(pulse->segment) * total;
    } else {
      const auto& coupling = std::get<CouplingStep>(step);
      // H_a = (field/2) sigma_z; a negative field is a positive rotation about -z.
      const Vector3 axis = field < 0.0 ? Vector3(-Vector3::UnitZ()) : Vector3(Vector3::UnitZ());
      total = segment_unitary({axis, std::abs(field), coupling.duration}) * total;
    }
  }
  return total;
}

Unitary4 block_diagonal(const Unitary2& up, const Unitary2& down) {
  Matrix4 m = Matrix4::Zero();
  m.topLeftCorner<2, 2>() = up.matrix();
  m.bottomRightCorner<2, 2>() = down.matrix();
  return Unitary4(m);
}

Unitary4 two_qubit_unitary(const ConditionalSchedule& sched) {
  return block_diagonal(conditional_block(sched, BState::up), conditional_block(sched, BState::down));
}

Unitary4 controlled_u(double chi, double omega, double omega2) {
  return two_qubit_unitary(controlled_u_schedule(chi, omega, omega2));
}

Unitary4 u2_natural_reference() {
  const Complex i(0.0, 1.0);
  Matrix4 m;
  m << -i, 0, 0, 0,
       0, i, 0, 0,
       0, 0, 0, -1,
       0, 0, 1, 0;
  return Unitary4(m);
}

Unitary4 u2_line_selective_reference() {
  const Complex i(0.0, 1.0);
  Matrix4 m;
  m << -i, 0, 0, 0,
       0, i, 0, 0,
       0, 0, 1, 0,
       0, 0, 0, 1;
  return Unitary4(m);
}

Unitary4 controlled_u_reference(double chi) { return block_diagonal(u_chi(chi), Unitary2::identity()); }

int operator_schmidt_rank(const Matrix4& u, double tol) {
  // Realign U[(a',b'),(a,b)] into R[(a',a),(b',b)].
  Matrix4 r;
  for (int ap = 0; ap < 2; ++ap)
    for (int a = 0; a < 2; ++a)
      for (int bp = 0; bp < 2; ++bp)
        for (int b = 0; b < 2; ++b) r(2 * ap + a, 2 * bp + b) = u(ap + 2 * bp, a + 2 * b);
  const Eigen::JacobiSVD<Matrix4> svd(r);
  int rank = 0;
  for (int k = 0; k < 4; ++k)
    if (svd.singularValues()(k) > tol) ++rank;
  return rank;
}

}  // namespace geoloop
